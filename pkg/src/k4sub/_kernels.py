"""Backtracking kernels over CSR adjacency (``indptr``, ``indices``).

All searches use explicit stacks so the same bodies run under numba and as plain
Python. Counts are int64; callers stop long before overflow via ``cap``.
"""
import numpy as np

from ._jit import jit

# branch-path pairs of the real-vertex quadruple, lexicographic
PAIR_A = np.array([0, 0, 0, 1, 1, 2], dtype=np.int64)
PAIR_B = np.array([1, 2, 3, 2, 3, 3], dtype=np.int64)


@jit
def cycles_kernel(indptr, indices, cap, record):
    """Count (and optionally record) simple cycles.

    A cycle is found from its minimum vertex r, through vertices > r only, and
    kept only in the direction whose second vertex is below its last vertex.
    Returns (count, truncated, rows, lengths).
    """
    n = indptr.shape[0] - 1
    stack = np.empty(n + 1, dtype=np.int64)
    ptr = np.empty(n + 1, dtype=np.int64)
    onpath = np.zeros(n, dtype=np.bool_)
    rows = np.empty((16 if record else 0, n), dtype=np.int64)
    lens = np.empty(16 if record else 0, dtype=np.int64)
    count = 0
    truncated = False
    for r in range(n):
        if truncated:
            break
        stack[0] = r
        ptr[0] = indptr[r]
        onpath[r] = True
        sp = 1
        while sp > 0:
            top = stack[sp - 1]
            if ptr[sp - 1] < indptr[top + 1]:
                w = indices[ptr[sp - 1]]
                ptr[sp - 1] += 1
                if w == r:
                    if sp >= 3 and stack[1] < top:
                        if count == cap:
                            truncated = True
                            break
                        if record:
                            if count == rows.shape[0]:
                                grown = np.empty((2 * count, n), dtype=np.int64)
                                grown[:count] = rows[:count]
                                rows = grown
                                glens = np.empty(2 * count, dtype=np.int64)
                                glens[:count] = lens[:count]
                                lens = glens
                            rows[count, :sp] = stack[:sp]
                            lens[count] = sp
                        count += 1
                elif w > r and not onpath[w]:
                    onpath[w] = True
                    stack[sp] = w
                    ptr[sp] = indptr[w]
                    sp += 1
            else:
                onpath[top] = False
                sp -= 1
        for i in range(sp):
            onpath[stack[i]] = False
    if record:
        return count, truncated, rows[:count], lens[:count]
    return count, truncated, rows, lens


@jit
def st_paths_kernel(indptr, indices, s, t, cap):
    """Number of simple s-t paths; stops after ``cap`` (returns truncated flag)."""
    n = indptr.shape[0] - 1
    stack = np.empty(n + 1, dtype=np.int64)
    ptr = np.empty(n + 1, dtype=np.int64)
    onpath = np.zeros(n, dtype=np.bool_)
    stack[0] = s
    ptr[0] = indptr[s]
    onpath[s] = True
    sp = 1
    count = 0
    while sp > 0:
        top = stack[sp - 1]
        if ptr[sp - 1] < indptr[top + 1]:
            w = indices[ptr[sp - 1]]
            ptr[sp - 1] += 1
            if w == t:
                if count == cap:
                    return count, True
                count += 1
            elif not onpath[w]:
                onpath[w] = True
                stack[sp] = w
                ptr[sp] = indptr[w]
                sp += 1
        else:
            onpath[top] = False
            sp -= 1
    return count, False


@jit
def _reachable(indptr, indices, blocked, a, b, seen, stamp, queue):
    # BFS a -> b through unblocked vertices; seen[] holds visit stamps
    seen[a] = stamp
    queue[0] = a
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        for j in range(indptr[u], indptr[u + 1]):
            w = indices[j]
            if w == b:
                return True
            if not blocked[w] and seen[w] != stamp:
                seen[w] = stamp
                queue[tail] = w
                tail += 1
    return False


@jit
def k4_kernel(indptr, indices, cand, marks, cap, record):
    """Enumerate K4-subdivisions whose real vertices are 4-subsets of ``cand``.

    For each quadruple (lexicographic in ``cand`` order) the six branch paths are
    grown one after another by DFS, pairs in lexicographic order, each path
    avoiding real vertices and all vertices used so far. After each completed
    path the remaining pairs are checked for reachability.

    ``marks`` is a 0/1 vector; ``hist[x, y]`` counts subdivisions with ``x`` marked
    real vertices and ``y`` marked unreal vertices. Recorded rows hold the six
    path lengths followed by the concatenated paths (endpoints included).
    Returns (count, truncated, hist, rows).
    """
    n = indptr.shape[0] - 1
    width = 6 + n + 8
    hist = np.zeros((5, n + 1), dtype=np.int64)
    rows = np.empty((16 if record else 0, width), dtype=np.int64)
    blocked = np.zeros(n, dtype=np.bool_)
    seen = np.zeros(n, dtype=np.int64)
    queue = np.empty(n + 1, dtype=np.int64)
    stack = np.empty(n + 8, dtype=np.int64)
    ptr = np.empty(n + 8, dtype=np.int64)
    pstart = np.empty(6, dtype=np.int64)
    pend = np.empty(6, dtype=np.int64)
    q = np.empty(4, dtype=np.int64)
    stamp = 0
    count = 0
    truncated = False
    nc = cand.shape[0]
    for i0 in range(nc):
        for i1 in range(i0 + 1, nc):
            for i2 in range(i1 + 1, nc):
                for i3 in range(i2 + 1, nc):
                    if truncated:
                        break
                    q[0] = cand[i0]
                    q[1] = cand[i1]
                    q[2] = cand[i2]
                    q[3] = cand[i3]
                    marked_real = 0
                    for j in range(4):
                        blocked[q[j]] = True
                        marked_real += marks[q[j]]
                    marked_int = 0
                    p = 0
                    stack[0] = q[0]
                    ptr[0] = indptr[q[0]]
                    pstart[0] = 0
                    sp = 1
                    while True:
                        top = stack[sp - 1]
                        if ptr[sp - 1] < indptr[top + 1]:
                            w = indices[ptr[sp - 1]]
                            ptr[sp - 1] += 1
                            if w == q[PAIR_B[p]]:
                                pend[p] = sp
                                if p == 5:
                                    if count == cap:
                                        truncated = True
                                        break
                                    hist[marked_real, marked_int] += 1
                                    if record:
                                        if count == rows.shape[0]:
                                            grown = np.empty((2 * count, width), dtype=np.int64)
                                            grown[:count] = rows[:count]
                                            rows = grown
                                        k = 6
                                        for pp in range(6):
                                            ln = pend[pp] - pstart[pp] + 1
                                            rows[count, pp] = ln
                                            rows[count, k:k + ln - 1] = stack[pstart[pp]:pend[pp]]
                                            rows[count, k + ln - 1] = q[PAIR_B[pp]]
                                            k += ln
                                    count += 1
                                else:
                                    ok = True
                                    for r in range(p + 1, 6):
                                        stamp += 1
                                        if not _reachable(indptr, indices, blocked, q[PAIR_A[r]],
                                                          q[PAIR_B[r]], seen, stamp, queue):
                                            ok = False
                                            break
                                    if ok:
                                        p += 1
                                        stack[sp] = q[PAIR_A[p]]
                                        ptr[sp] = indptr[q[PAIR_A[p]]]
                                        pstart[p] = sp
                                        sp += 1
                            elif not blocked[w]:
                                blocked[w] = True
                                marked_int += marks[w]
                                stack[sp] = w
                                ptr[sp] = indptr[w]
                                sp += 1
                        else:
                            sp -= 1
                            if sp == pstart[p]:
                                if p == 0:
                                    break
                                p -= 1
                            else:
                                blocked[top] = False
                                marked_int -= marks[top]
                    # unwind whatever a truncation left on the stack
                    for j in range(sp):
                        if not (stack[j] == q[0] or stack[j] == q[1] or stack[j] == q[2]
                                or stack[j] == q[3]):
                            blocked[stack[j]] = False
                    for j in range(4):
                        blocked[q[j]] = False
    if record:
        return count, truncated, hist, rows[:count]
    return count, truncated, hist, rows
