"""Look up integer prefixes in the OEIS.

Network access is opt-in. Offline lookups read a fixture in the same JSON
shape as the OEIS search endpoint; a small one ships with the package.
"""

from __future__ import annotations

import json
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from .errors import HttpError, NetworkDisabled

SEARCH_URL = "https://oeis.org/search"
TIMEOUT = 10.0
MIN_PREFIX = 4


@dataclass(frozen=True)
class OeisHit:
    id: str
    name: str
    offset: int  # index in the entry's data where the prefix starts


def _entries(payload: Any) -> list[dict]:
    # The endpoint has returned both a bare list and {"results": [...]}; no results is null.
    if payload is None:
        return []
    if isinstance(payload, dict):
        return payload.get("results") or []
    return list(payload)


def match_entries(prefix: Sequence[int], payload: Any) -> list[OeisHit]:
    """Entries whose data contains ``prefix`` as a contiguous run."""
    prefix = [int(v) for v in prefix]
    hits = []
    for entry in _entries(payload):
        data = [int(v) for v in str(entry.get("data", "")).split(",") if v.strip()]
        for i in range(len(data) - len(prefix) + 1):
            if data[i : i + len(prefix)] == prefix:
                hits.append(OeisHit(f"A{int(entry['number']):06d}", entry.get("name", ""), i))
                break
    return hits


def load_fixture(path: str | Path | None = None) -> Any:
    if path is None:
        text = resources.files("hurwitz").joinpath("data/oeis_fixture.json").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return json.loads(text)


def _fetch(prefix: Sequence[int], timeout: float) -> Any:
    query = urllib.parse.urlencode({"fmt": "json", "q": ",".join(str(v) for v in prefix)}, safe=",")
    url = f"{SEARCH_URL}?{query}"
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            status = getattr(resp, "status", 200)
            if status != 200:
                raise HttpError(status, url)
            return json.loads(resp.read().decode("utf-8") or "null")
    except urllib.error.HTTPError as exc:
        raise HttpError(exc.code, url) from None
    except urllib.error.URLError as exc:
        # no HTTP status exists for DNS/connection failures
        raise HttpError(0, f"{url} ({exc.reason})") from None


def oeis_lookup(
    prefix: Sequence[int],
    *,
    online: bool = False,
    fixture: str | Path | bool | None = None,
    timeout: float = TIMEOUT,
) -> list[OeisHit]:
    """Exact-prefix OEIS matches for ``prefix`` (at least four terms).

    ``online=True`` issues one GET to the search endpoint. Otherwise
    ``fixture`` selects offline data: a path, or ``True`` for the bundled
    fixture. With neither, NetworkDisabled is raised. An empty list means
    no match.
    """
    if len(prefix) < MIN_PREFIX:
        raise ValueError(f"OEIS lookup needs at least {MIN_PREFIX} terms, got {len(prefix)}")
    if online:
        payload = _fetch(prefix, timeout)
    elif fixture is not None and fixture is not False:
        payload = load_fixture(None if fixture is True else fixture)
    else:
        raise NetworkDisabled()
    return match_entries(prefix, payload)
