"""Pure-Python hot loops (fallback for the compiled ``_kernels`` extension).

All kernels work on integer data only:

* *labels* are the pairings of a vector with the simple coroots, scaled by a
  common denominator so they are integers;
* ``cartan[j][i]`` is ``<alpha_j, alpha_i^vee>``, so the simple reflection
  ``s_j`` acts on labels by ``c_i -> c_i - c_j * cartan[j][i]``.
"""


def to_dominant(labels, cartan):
    """Reflect by the first simple root with negative label until none is left.

    Returns ``(dominant_labels, steps)`` where ``steps`` lists simple-root
    indices in the order they were applied.
    """
    c = list(labels)
    n = len(c)
    steps = []
    while True:
        for j in range(n):
            if c[j] < 0:
                break
        else:
            return tuple(c), steps
        cj = c[j]
        row = cartan[j]
        for i in range(n):
            if row[i]:
                c[i] -= cj * row[i]
        steps.append(j)


def orbit(labels, cartan, cap):
    """Breadth-first closure under all simple reflections.

    Returns the list of label tuples, or ``None`` once more than ``cap``
    distinct elements have been seen.
    """
    start = tuple(labels)
    n = len(start)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for j in range(n):
                cj = c[j]
                if not cj:
                    continue
                row = cartan[j]
                d = tuple(c[i] - cj * row[i] for i in range(n))
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return list(seen)


def additive_closure(vectors, seed):
    """Least superset of ``seed`` closed under sums that land in ``vectors``.

    ``vectors`` is a list of integer tuples, ``seed`` an iterable of indices
    into it.  Returns the sorted list of member indices.
    """
    index = {v: i for i, v in enumerate(vectors)}
    members = set(seed)
    work = list(members)
    dim = len(vectors[0]) if vectors else 0
    while work:
        a = work.pop()
        va = vectors[a]
        for b in list(members):
            vb = vectors[b]
            s = tuple(va[k] + vb[k] for k in range(dim))
            c = index.get(s)
            if c is not None and c not in members:
                members.add(c)
                work.append(c)
    return sorted(members)
