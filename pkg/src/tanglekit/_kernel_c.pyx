# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled smoothing enumerator for planar diagrams.

Typed twin of _kernel_py.resolve_states; see that module for the full
contract.  The Gray-code walk, the chase order, and the returned
dictionary are identical, and the test suite compares the two
implementations whenever this extension is importable.
"""

from libc.stdlib cimport calloc, free, malloc

__all__ = ["resolve_states"]


def resolve_states(num_ends, crossings, arcs, boundary):
    """Tally all smoothings of a diagram; see _kernel_py.resolve_states."""
    cdef Py_ssize_t n = num_ends
    quads_py = [tuple(cr) for cr in crossings]
    cdef Py_ssize_t c = len(quads_py)
    cdef Py_ssize_t nb = len(boundary)

    cdef int *arc_to = <int *> malloc((n if n else 1) * sizeof(int))
    cdef int *arc_w = <int *> calloc(n if n else 1, sizeof(int))
    cdef int *sm = <int *> malloc((n if n else 1) * sizeof(int))
    cdef long *stamp = <long *> calloc(n if n else 1, sizeof(long))
    cdef char *is_b = <char *> calloc(n if n else 1, sizeof(char))
    cdef int *bindex = <int *> malloc((n if n else 1) * sizeof(int))
    cdef int *bends = <int *> malloc((nb if nb else 1) * sizeof(int))
    cdef int *quads = <int *> malloc((4 * c if c else 1) * sizeof(int))
    cdef int *pair_buf = <int *> malloc((2 * nb if nb else 1) * sizeof(int))
    if (arc_to == NULL or arc_w == NULL or sm == NULL or stamp == NULL
            or is_b == NULL or bindex == NULL or bends == NULL
            or quads == NULL or pair_buf == NULL):
        free(arc_to); free(arc_w); free(sm); free(stamp); free(is_b)
        free(bindex); free(bends); free(quads); free(pair_buf)
        raise MemoryError()

    cdef Py_ssize_t i, j, k, npairs
    cdef int a, b, w, e, e0, e1, e2, e3, p, q, r, ncon, ness
    cdef long tick = 0, bits = 0
    cdef unsigned long long s, gray = 0
    cdef unsigned long long total = (<unsigned long long> 1) << c
    cdef dict out = {}

    try:
        for i in range(n):
            arc_to[i] = -1
            sm[i] = -1
        for item in arcs:
            a = item[0]
            b = item[1]
            w = item[2]
            arc_to[a] = b
            arc_w[a] = w
            arc_to[b] = a
            arc_w[b] = -w
        for i in range(nb):
            e = boundary[i]
            bends[i] = e
            bindex[e] = i
            is_b[e] = 1
        k = 0
        for quad in quads_py:
            e0 = quad[0]
            e1 = quad[1]
            e2 = quad[2]
            e3 = quad[3]
            quads[k] = e0
            quads[k + 1] = e1
            quads[k + 2] = e2
            quads[k + 3] = e3
            k += 4
            sm[e0] = e1
            sm[e1] = e0
            sm[e2] = e3
            sm[e3] = e2

        for s in range(total):
            if s:
                j = 0
                while not (s >> j) & 1:
                    j += 1
                gray ^= (<unsigned long long> 1) << j
                e0 = quads[4 * j]
                e1 = quads[4 * j + 1]
                e2 = quads[4 * j + 2]
                e3 = quads[4 * j + 3]
                if (gray >> j) & 1:
                    sm[e1] = e2
                    sm[e2] = e1
                    sm[e3] = e0
                    sm[e0] = e3
                    bits += 1
                else:
                    sm[e0] = e1
                    sm[e1] = e0
                    sm[e2] = e3
                    sm[e3] = e2
                    bits -= 1
            tick += 1

            npairs = 0
            for i in range(nb):
                e = bends[i]
                if stamp[e] == tick:
                    continue
                stamp[e] = tick
                p = e
                while True:
                    q = arc_to[p]
                    stamp[q] = tick
                    if is_b[q]:
                        pair_buf[2 * npairs] = <int> i
                        pair_buf[2 * npairs + 1] = bindex[q]
                        npairs += 1
                        break
                    r = sm[q]
                    stamp[r] = tick
                    p = r

            ncon = 0
            ness = 0
            for k in range(4 * c):
                e = quads[k]
                if stamp[e] == tick:
                    continue
                stamp[e] = tick
                w = 0
                p = e
                while True:
                    w += arc_w[p]
                    q = arc_to[p]
                    stamp[q] = tick
                    r = sm[q]
                    if r == e:
                        break
                    stamp[r] = tick
                    p = r
                if w == 0:
                    ncon += 1
                elif w == 1 or w == -1:
                    ness += 1
                else:
                    raise ValueError(
                        f"smoothed loop winds {w} times around the annulus core"
                    )

            pairs = []
            for i in range(npairs):
                pairs.append((pair_buf[2 * i], pair_buf[2 * i + 1]))
            key = (tuple(pairs), c - 2 * bits, ncon, ness)
            out[key] = out.get(key, 0) + 1
        return out
    finally:
        free(arc_to); free(arc_w); free(sm); free(stamp); free(is_b)
        free(bindex); free(bends); free(quads); free(pair_buf)
