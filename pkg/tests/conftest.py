import pytest

# criterion id -> list of (label, passed, detail)
_RESULTS: dict = {}


class Recorder:
    def __init__(self, cid: str):
        self.cid = cid
        _RESULTS.setdefault(cid, [])

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        _RESULTS[self.cid].append((label, bool(ok), detail))
        return bool(ok)

    def failures(self) -> list:
        return [f"{lab}: {det}" for lab, ok, det in _RESULTS[self.cid] if not ok]


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    return Recorder(marker.args[0])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid): acceptance criterion this test reports on")


def _key(cid: str) -> int:
    return int(cid[1:])


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance")
    for cid in sorted(_RESULTS, key=_key):
        rows = _RESULTS[cid]
        ok = bool(rows) and all(r[1] for r in rows)
        terminalreporter.write_line(f"ACCEPTANCE {cid} {'PASS' if ok else 'FAIL'} ({len(rows)} checks)")
        for label, passed, detail in rows:
            if not passed:
                terminalreporter.write_line(f"    failed: {label}" + (f" ({detail})" if detail else ""))
