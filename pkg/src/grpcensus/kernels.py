"""Hot inner loops over Cayley tables.

Every kernel here operates on plain integer arrays so that it can be compiled
with numba.  When numba is disabled (``GRPCENSUS_DISABLE_NUMBA=1``) the same
loop bodies run as ordinary Python, except where a vectorised numpy version
is the more natural fallback; those are selected explicitly below.

Tables are ``(n, n)`` integer arrays with ``table[a, b] = a*b``; ``-1`` marks
an undetermined cell during enumeration.
"""
import numpy as np

from ._accel import USE_NUMBA, jit


# -- validation -------------------------------------------------------------

@jit
def _latin_violation_loops(table):
    n = table.shape[0]
    seen = np.zeros(n, dtype=np.bool_)
    for r in range(n):
        seen[:] = False
        for c in range(n):
            v = table[r, c]
            if seen[v]:
                return 0, r, c
            seen[v] = True
    for c in range(n):
        seen[:] = False
        for r in range(n):
            v = table[r, c]
            if seen[v]:
                return 1, r, c
            seen[v] = True
    return -1, -1, -1


def _latin_violation_numpy(table):
    n = table.shape[0]
    ref = np.arange(n)
    for axis, view in ((0, table), (1, table.T)):
        bad = np.flatnonzero((np.sort(view, axis=1) != ref).any(axis=1))
        if bad.size:
            line = view[bad[0]]
            _, first = np.unique(line, return_index=True)
            dup = np.setdiff1d(np.arange(n), first)[0]
            r, c = (bad[0], dup) if axis == 0 else (dup, bad[0])
            return axis, int(r), int(c)
    return -1, -1, -1


@jit
def right_closure(table, gens, start):
    """Close ``start`` (bool mask) under right multiplication by ``gens``.

    For a group table, starting from ``{0}`` this yields the subgroup
    generated by ``gens``.
    """
    n = table.shape[0]
    mask = start.copy()
    queue = np.empty(n, dtype=np.int64)
    head = 0
    tail = 0
    for x in range(n):
        if mask[x]:
            queue[tail] = x
            tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        for k in range(gens.shape[0]):
            y = table[x, gens[k]]
            if not mask[y]:
                mask[y] = True
                queue[tail] = y
                tail += 1
    return mask


def magma_generators(table):
    """Greedy set whose right-nested products already cover every element."""
    n = table.shape[0]
    gens = []
    covered = np.zeros(n, dtype=np.bool_)
    covered[0] = True
    while not covered.all():
        g = int(np.flatnonzero(~covered)[0])
        gens.append(g)
        start = np.zeros(n, dtype=np.bool_)
        start[0] = True
        start[gens] = True
        covered = right_closure(table, np.asarray(gens, dtype=np.int64), start)
    return np.asarray(gens, dtype=np.int64)


@jit
def _light_violation_loops(table, gens):
    n = table.shape[0]
    for k in range(gens.shape[0]):
        s = gens[k]
        for x in range(n):
            xs = table[x, s]
            for y in range(n):
                if table[xs, y] != table[x, table[s, y]]:
                    return x, s, y
    return -1, -1, -1


def _light_violation_numpy(table, gens):
    for s in gens:
        lhs = table[table[:, s]]
        rhs = table[:, table[s]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            return int(bad[0, 0]), int(s), int(bad[0, 1])
    return -1, -1, -1


@jit
def _first_assoc_violation_loops(table):
    n = table.shape[0]
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            for c in range(n):
                if table[ab, c] != table[a, table[b, c]]:
                    return a, b, c
    return -1, -1, -1


def _first_assoc_violation_numpy(table):
    for a in range(table.shape[0]):
        lhs = table[table[a]]
        rhs = table[a][table]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            return a, int(bad[0, 0]), int(bad[0, 1])
    return -1, -1, -1


def associativity_violation(table):
    """First violating triple ``(a, b, c)`` in lexicographic order, or None.

    Light's test over a generating set decides associativity in
    O(n^2 log n); the cubic scan only runs to locate the first witness.
    """
    light = _light_violation(table, magma_generators(table))
    if light[0] < 0:
        return None
    return tuple(int(v) for v in _first_assoc_violation(table))


# -- element data -----------------------------------------------------------

@jit
def _element_orders_loops(table):
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    for a in range(n):
        x = a
        k = 1
        # a * a^k walks along row a, which stays in cache
        while x != 0:
            x = table[a, x]
            k += 1
            if k > n:
                k = -1
                break
        orders[a] = k
    return orders


def _element_orders_numpy(table):
    n = table.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    cur = idx.copy()
    for k in range(1, n + 1):
        hit = (cur == 0) & (orders == 0)
        orders[hit] = k
        if (orders > 0).all():
            break
        cur = table[cur, idx]
    orders[orders == 0] = -1
    return orders


@jit
def cyclic_representatives(table, orders):
    """For each x, the smallest index generating the same cyclic subgroup."""
    n = table.shape[0]
    rep = np.empty(n, dtype=np.int64)
    for a in range(n):
        m = orders[a]
        best = a
        x = a
        for k in range(2, m):
            x = table[a, x]
            # x = a^k generates <a> iff gcd(k, m) == 1
            p, q = k, m
            while q:
                p, q = q, p % q
            if p == 1 and x < best:
                best = x
        rep[a] = best
    return rep


# -- isomorphism extension --------------------------------------------------

@jit
def extend_images(table_a, table_b, gens, gen_images):
    """Extend generator images to the subgroup of A they generate.

    Returns ``(status, images)``: status 0 on success (a well-defined
    injective homomorphism on <gens>), 1 on an inconsistent image, 2 when
    two elements collide.  ``images`` is -1 outside <gens>.
    """
    n = table_a.shape[0]
    m = table_b.shape[0]
    images = np.full(n, -1, dtype=np.int64)
    hit = np.zeros(m, dtype=np.bool_)
    queue = np.empty(n, dtype=np.int64)
    images[0] = 0
    hit[0] = True
    queue[0] = 0
    head = 0
    tail = 1
    while head < tail:
        x = queue[head]
        head += 1
        fx = images[x]
        for k in range(gens.shape[0]):
            y = table_a[x, gens[k]]
            fy = table_b[fx, gen_images[k]]
            if images[y] < 0:
                if hit[fy]:
                    return 2, images
                images[y] = fy
                hit[fy] = True
                queue[tail] = y
                tail += 1
            elif images[y] != fy:
                return 1, images
    return 0, images


# -- table enumeration ------------------------------------------------------

@jit
def _assoc_ok(T, rowpos, a, b, v):
    """Check every fully-known triple touching cell (a, b) = v."""
    n = T.shape[0]
    # (a b) z = a (b z)
    for z in range(n):
        l = T[v, z]
        w = T[b, z]
        if l >= 0 and w >= 0:
            r = T[a, w]
            if r >= 0 and l != r:
                return False
    # (x a) b = x (a b)
    for x in range(n):
        u = T[x, a]
        r = T[x, v]
        if u >= 0 and r >= 0:
            l = T[u, b]
            if l >= 0 and l != r:
                return False
    # (x y) b = x (y b) with x y = a
    for x in range(n):
        y = rowpos[x, a]
        if y >= 0:
            w = T[y, b]
            if w >= 0:
                r = T[x, w]
                if r >= 0 and r != v:
                    return False
    # (a y) z = a (y z) with y z = b
    for y in range(n):
        z = rowpos[y, b]
        if z >= 0:
            u = T[a, y]
            if u >= 0:
                l = T[u, z]
                if l >= 0 and l != v:
                    return False
    return True


@jit
def _chain(T, rowpos, i, j):
    """Length of the row-i cycle (or open chain) through column j and
    whether it is closed."""
    n = T.shape[0]
    length = 1
    x = T[i, j]
    while x >= 0 and x != j:
        length += 1
        x = T[i, x]
        if length > n:
            break
    if x == j:
        return length, True
    y = rowpos[i, j]
    while y >= 0:
        length += 1
        y = rowpos[i, y]
    return length, False


@jit
def _cycles_ok(T, rowpos, i, j, maxord):
    """Row i is left multiplication by i: every cycle has length ord(i),
    which divides n and (with symmetry) is at most ``maxord``."""
    n = T.shape[0]
    length, closed = _chain(T, rowpos, i, j)
    limit = n
    if maxord > 0 and maxord < limit:
        limit = maxord
    if length > limit:
        return False
    if closed and n % length != 0:
        return False
    # the cycle through the identity column has length ord(i)
    olen, oclosed = _chain(T, rowpos, i, 0)
    if oclosed:
        if closed and length != olen:
            return False
        if not closed and length > olen:
            return False
    elif closed and olen > length:
        return False
    return True


def new_search_state(n):
    """Fresh backtracking state with the identity row and column filled."""
    T = np.full((n, n), -1, dtype=np.int64)
    rowpos = np.full((n, n), -1, dtype=np.int64)
    colused = np.zeros((n, n), dtype=np.bool_)
    for x in range(n):
        T[0, x] = x
        T[x, 0] = x
        rowpos[0, x] = x
        rowpos[x, x] = 0
        colused[0, x] = True
        colused[x, x] = True
    ncell = (n - 1) * (n - 1)
    nextv = np.zeros(max(ncell, 1), dtype=np.int64)
    stats = np.zeros(2, dtype=np.int64)  # nodes visited, tables completed
    return {"T": T, "rowpos": rowpos, "colused": colused, "nextv": nextv,
            "k": np.zeros(1, dtype=np.int64), "stats": stats}


@jit
def search_tables(T, rowpos, colused, nextv, kbox, stats, symmetry, out):
    """Resumable row-major backtracking over partial Cayley tables.

    Fills ``out`` with completed tables and returns how many were written;
    a return value smaller than ``len(out)`` means the search is exhausted.
    With ``symmetry`` set, row 1 must introduce fresh labels in ascending
    order and element 1 must have maximal order; every relabelling class
    keeps at least one such table.
    """
    n = T.shape[0]
    ncell = (n - 1) * (n - 1)
    cap = out.shape[0]
    count = 0
    if ncell == 0:
        if kbox[0] == 0:
            out[0, 0, 0] = 0
            kbox[0] = -1
            stats[1] += 1
            return 1
        return 0
    k = kbox[0]
    while k >= 0:
        if k == ncell:
            for i in range(n):
                for j in range(n):
                    out[count, i, j] = T[i, j]
            count += 1
            stats[1] += 1
            k = ncell - 1
            if count == cap:
                kbox[0] = k
                return count
            continue
        i = k // (n - 1) + 1
        j = k % (n - 1) + 1
        old = T[i, j]
        if old >= 0:
            T[i, j] = -1
            rowpos[i, old] = -1
            colused[j, old] = False
        bound = n - 1
        if symmetry and i == 1:
            m = j if j > 1 else 1
            for jj in range(1, j):
                if T[1, jj] > m:
                    m = T[1, jj]
            if m + 1 < bound:
                bound = m + 1
        maxord = 0
        if symmetry and i > 1:
            # element 1 is taken to have maximal order
            maxord, closed1 = _chain(T, rowpos, 1, 0)
        found = -1
        v = nextv[k]
        while v <= bound:
            if rowpos[i, v] < 0 and not colused[j, v]:
                stats[0] += 1
                T[i, j] = v
                rowpos[i, v] = j
                if _cycles_ok(T, rowpos, i, j, maxord) and _assoc_ok(T, rowpos, i, j, v):
                    found = v
                    break
                T[i, j] = -1
                rowpos[i, v] = -1
            v += 1
        if found >= 0:
            colused[j, found] = True
            nextv[k] = found + 1
            k += 1
            if k < ncell:
                nextv[k] = 0
        else:
            nextv[k] = 0
            k -= 1
    kbox[0] = -1
    return count


if USE_NUMBA:
    _latin_violation = _latin_violation_loops
    _light_violation = _light_violation_loops
    _first_assoc_violation = _first_assoc_violation_loops
    element_orders = _element_orders_loops
else:
    _latin_violation = _latin_violation_numpy
    _light_violation = _light_violation_numpy
    _first_assoc_violation = _first_assoc_violation_numpy
    element_orders = _element_orders_numpy


def latin_violation(table):
    """``(axis, row, col)`` of the first repeated entry, or None."""
    axis, r, c = _latin_violation(table)
    if axis < 0:
        return None
    return int(axis), int(r), int(c)
