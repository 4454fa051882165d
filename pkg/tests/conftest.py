import itertools

import numpy as np
import pytest

from gmet.spec import build_group

# every group of order at most 8, up to isomorphism
GROUPS_UP_TO_8 = ["C1", "C2", "C3", "C4", "C2^2", "C5", "C6", "S3", "C7",
                  "C8", "C4xC2", "C2^3", "D4", "Q8"]
GROUPS_UP_TO_7 = GROUPS_UP_TO_8[:9]
# a spread of groups of order at most 12
GROUPS_UP_TO_12 = GROUPS_UP_TO_8 + ["C9", "C3^2", "C10", "D5", "C11", "C12",
                                    "C3xC2^2", "D6", "Q12", "A4"]


@pytest.fixture(scope="session")
def groups():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = build_group(spec)
        return cache[spec]

    return get


def brute_force_automorphisms(color):
    """All vertex permutations preserving a color matrix, by exhaustion."""
    n = color.shape[0]
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    images = color[perms[:, :, None], perms[:, None, :]]
    keep = (images == color[None, :, :]).all(axis=(1, 2))
    return {tuple(int(v) for v in p) for p in perms[keep]}


# -- acceptance report ------------------------------------------------------

_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def criterion(request):
    """Context manager that records one PASS/FAIL line for a criterion."""
    import contextlib
    import time

    log = request.config.stash[_ACCEPTANCE]

    @contextlib.contextmanager
    def run(number, title):
        info = {}
        start = time.perf_counter()
        try:
            yield info
        except BaseException as exc:
            line = f"criterion {number:2d} FAIL  {title} ({time.perf_counter() - start:.1f}s): {exc!s:.200}"
            log.append(line)
            print(line)
            raise
        detail = f"; {info['detail']}" if info.get("detail") else ""
        line = f"criterion {number:2d} PASS  {title} ({time.perf_counter() - start:.1f}s{detail})"
        log.append(line)
        print(line)

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
