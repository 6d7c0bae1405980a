"""Naive GF(2) linear algebra on plain int lists.

Deliberately independent of the packaged implementation: rows are Python
lists of 0/1, elimination is the textbook O(n^3) loop.  Used as the
reference oracle for rank / kernel / span questions in the tests.
"""


def naive_rank(rows):
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(work)):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                work[r] = [(a + b) % 2 for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def naive_kernel(rows):
    """Basis of {v : sum_i v_i row_i = 0}, by augmented elimination."""
    n = len(rows)
    if n == 0:
        return []
    ncols = len(rows[0])
    work = [list(r) + [1 if j == i else 0 for j in range(n)] for i, r in enumerate(rows)]
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, n):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(n):
            if r != rank and work[r][col]:
                work[r] = [(a + b) % 2 for a, b in zip(work[r], work[rank])]
        rank += 1
    return [w[ncols:] for w in work[rank:]]


def span_elements(rows):
    """Every element of the row span (only for tiny inputs)."""
    out = {tuple([0] * len(rows[0]))} if rows else set()
    for r in rows:
        out |= {tuple((a + b) % 2 for a, b in zip(v, r)) for v in out}
    return out
