from itertools import combinations

import pytest

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def oracle_cycle_lengths(edges):
    """Plain union-find component sizes; asserts 2-regularity. Shares no code with the package."""
    edges = [tuple(e) for e in edges]
    deg = {}
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        for v in (a, b):
            deg[v] = deg.get(v, 0) + 1
            parent.setdefault(v, v)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    assert all(d == 2 for d in deg.values()), "not 2-regular"
    sizes = {}
    for v in deg:
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return sorted(sizes.values())


def norm(edges):
    return sorted((min(a, b), max(a, b)) for a, b in edges)


def kn_edges(n):
    return list(combinations(range(n), 2))


def blowup_edges(pairs, k):
    q = 2 * k
    return [
        (min(a * q + x, b * q + y), max(a * q + x, b * q + y)) for a, b in pairs for x in range(q) for y in range(q)
    ]


def block_edges(k, t):
    q = 2 * k
    return [(b * q + x, b * q + y) for b in range(2 * t) for x, y in combinations(range(q), 2)]


def matching_edges(i, j, d, k):
    q = 2 * k
    return [(min(i * q + l, j * q + (l + d) % q), max(i * q + l, j * q + (l + d) % q)) for l in range(q)]


@pytest.fixture
def record_criterion(request):
    store = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(number, title, passed, detail=""):
        store.append((number, title, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = config.stash.get(_ACCEPTANCE_KEY, [])
    if not rows:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, passed, detail in sorted(rows):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}" + (f"  [{detail}]" if detail else ""))
