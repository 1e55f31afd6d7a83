#!/usr/bin/env python3
"""Generate the bundled transitive-group catalog fixtures.

Every entry is built from first principles (matrix groups over small fields,
regular representations, coset actions) and then cross-checked against sympy's
permutation-group machinery (Schreier-Sims): group order, transitivity and
point-stabilizer order must match the expected values before anything is
written. The frozen output files are fixtures/core.catalog and
fixtures/stretch.catalog.

Image-array convention: a permutation of degree n is the list [p(0),...,p(n-1)].
Composition in this script is (p*q)(x) = q(p(x)) (apply p first).
"""

import sys
from itertools import product
from sympy.combinatorics import Permutation, PermutationGroup


def compose(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def closure(gens):
    idn = tuple(range(len(gens[0])))
    seen = {idn}
    frontier = [idn]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def regular_rep(gens):
    """Right-regular representation of the group generated by gens."""
    elems = sorted(closure(gens))
    index = {e: i for i, e in enumerate(elems)}
    out = []
    for g in gens:
        out.append(tuple(index[compose(e, g)] for e in elems))
    return out


def coset_action(gens, subgens, degree):
    """Action of <gens> on right cosets of <subgens> by right multiplication."""
    G = sorted(closure(gens))
    H = closure(subgens) if subgens else {tuple(range(degree))}
    coset_of = {}
    reps = []
    for g in G:
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for h in H:
            coset_of[compose(h, g)] = idx
    out = []
    for g in gens:
        out.append(tuple(coset_of[compose(r, g)] for r in reps))
    return out, len(reps)


def cyclic(n):
    return [tuple((i + 1) % n for i in range(n))]


def dihedral(n):
    """Dihedral group of order 2n acting on n points."""
    rot = tuple((i + 1) % n for i in range(n))
    flip = tuple((n - i) % n for i in range(n))
    return [rot, flip]


def symmetric(n):
    cyc = tuple((i + 1) % n for i in range(n))
    swap = tuple([1, 0] + list(range(2, n)))
    return [cyc, swap]


def alternating(n):
    three = tuple([1, 2, 0] + list(range(3, n)))
    if n % 2 == 1:
        big = tuple((i + 1) % n for i in range(n))
    else:
        big = tuple([0] + [1 + ((i + 1) % (n - 1)) for i in range(n - 1)])
    return [three, big]


def affine(p, a):
    """x -> x+1 and x -> a*x on {0..p-1}."""
    return [tuple((x + 1) % p for x in range(p)),
            tuple((a * x) % p for x in range(p))]


def grid_product(factors):
    """Product action of S2 x S3 x ... on the grid of point tuples."""
    sizes = [len(f[0]) for f in factors]
    points = list(product(*[range(s) for s in sizes]))
    index = {pt: i for i, pt in enumerate(points)}
    gens = []
    for axis, fgens in enumerate(factors):
        for g in fgens:
            img = []
            for pt in points:
                q = list(pt)
                q[axis] = g[q[axis]]
                img.append(index[tuple(q)])
            gens.append(tuple(img))
    return gens


def product_regular(sizes):
    """Regular representation of a direct product of cyclic groups."""
    points = list(product(*[range(s) for s in sizes]))
    index = {pt: i for i, pt in enumerate(points)}
    gens = []
    for axis, s in enumerate(sizes):
        img = []
        for pt in points:
            q = list(pt)
            q[axis] = (q[axis] + 1) % s
            img.append(index[tuple(q)])
        gens.append(tuple(img))
    return gens


def quaternion_abstract():
    """Q8 as the regular action on {1,-1,i,-i,j,-j,k,-k} (indices 0..7)."""
    # multiplication table of the quaternion group on symbols
    # 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    neg = {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4, 6: 7, 7: 6}
    base = {(2, 2): 1, (4, 4): 1, (6, 6): 1,
            (2, 4): 6, (4, 2): 7, (4, 6): 2, (6, 4): 3, (6, 2): 4, (2, 6): 5}

    def mul(a, b):
        sign = 0
        if a in (1, 3, 5, 7):
            sign ^= 1
            a = neg[a]
        if b in (1, 3, 5, 7):
            sign ^= 1
            b = neg[b]
        if a == 0:
            r = b
        elif b == 0:
            r = a
        else:
            r = base[(a, b)]
        return neg[r] if sign else r

    gi = tuple(mul(x, 2) for x in range(8))  # right multiplication by i
    gj = tuple(mul(x, 4) for x in range(8))
    return [gi, gj]


# ---------------------------------------------------------------- GF(2) linear

def gl_gens(dim):
    """Generators of GL(dim,2): cyclic coordinate shift + one transvection."""
    shift = [[1 if c == (r + 1) % dim else 0 for c in range(dim)] for r in range(dim)]
    trans = [[1 if c == r else 0 for c in range(dim)] for r in range(dim)]
    trans[0][1] = 1
    return [tuple(map(tuple, shift)), tuple(map(tuple, trans))]


def mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[r][k] & b[k][c] for k in range(n)) & 1
                       for c in range(n)) for r in range(n))


def mat_closure(gens):
    idn = tuple(tuple(1 if r == c else 0 for c in range(len(gens[0]))) for r in range(len(gens[0])))
    seen = {idn}
    frontier = [idn]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mat_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def vec_index(v):
    return sum(b << i for i, b in enumerate(v)) - 1


def mat_apply(m, v):
    return tuple(sum(m[r][c] & v[c] for c in range(len(v))) & 1 for r in range(len(v)))


def l32_points():
    """PSL(3,2) = GL(3,2) on the 7 nonzero vectors of F_2^3."""
    gens = gl_gens(3)
    vecs = [v for v in product((0, 1), repeat=3) if any(v)]
    index = {v: i for i, v in enumerate(vecs)}
    out = []
    for m in gens:
        out.append(tuple(index[mat_apply(m, v)] for v in vecs))
    return out


def l32_flags():
    """GL(3,2) on the 21 flags (point, line)."""
    gens = gl_gens(3)
    vecs = [v for v in product((0, 1), repeat=3) if any(v)]
    flags = []
    for v in vecs:
        for phi in vecs:  # phi = normal vector of the plane (line in P^2)
            if sum(a & b for a, b in zip(v, phi)) & 1 == 0:
                flags.append((v, phi))
    assert len(flags) == 21
    index = {f: i for i, f in enumerate(flags)}
    out = []
    for m in gens:
        # phi transforms by the inverse transpose so incidence is preserved
        minv = None
        for cand in mat_closure(gl_gens(3)):
            if mat_mul(m, cand) == tuple(tuple(1 if r == c else 0 for c in range(3)) for r in range(3)):
                minv = cand
                break
        mt = tuple(tuple(minv[c][r] for c in range(3)) for r in range(3))
        img = tuple(index[(mat_apply(m, v), mat_apply(mt, phi))] for (v, phi) in flags)
        out.append(img)
    return out


def l32_cosets_of_s3():
    """GL(3,2) on the 28 right cosets of a subgroup isomorphic to S3."""
    pts = l32_points()
    G = sorted(closure(pts))
    assert len(G) == 168

    def order(p):
        k, q = 1, p
        idn = tuple(range(len(p)))
        while q != idn:
            q = compose(q, p)
            k += 1
        return k

    s3 = None
    invs = [g for g in G if order(g) == 2]
    tris = [g for g in G if order(g) == 3]
    for s in invs:
        for t in tris:
            sub = closure([s, t])
            if len(sub) == 6:
                s3 = [s, t]
                break
        if s3:
            break
    assert s3 is not None
    action, deg = coset_action(pts, s3, 7)
    assert deg == 28
    return action


def l42_borel_cosets():
    """GL(4,2) (order 20160) on the 315 cosets of its Borel subgroup."""
    gens = gl_gens(4)
    vecs = [v for v in product((0, 1), repeat=4) if any(v)]
    index = {v: i for i, v in enumerate(vecs)}
    pgens = [tuple(index[mat_apply(m, v)] for v in vecs) for m in gens]
    G = sorted(closure(pgens))
    assert len(G) == 20160, len(G)

    mats = mat_closure(gens)
    borel = [m for m in mats if all(m[r][c] == 0 for r in range(4) for c in range(r))
             and all(m[r][r] == 1 for r in range(4))]
    assert len(borel) == 64
    bperms = [tuple(index[mat_apply(m, v)] for v in vecs) for m in borel]
    action, deg = coset_action(pgens, bperms[:6], 15)
    assert deg == 315, deg
    return action


# --------------------------------------------------------------------- entries

def f20_on_10():
    """F20 = 5:4 on the 10 cosets of <b^2> (TransitiveGroup(10,4) per the catalog)."""
    a, b = affine(5, 2)  # b has order 4 (2 is a primitive root mod 5)
    b2 = compose(b, b)
    action, deg = coset_action([a, b], [b2], 5)
    assert deg == 10
    return action


def s4_on_12():
    """S4 on the 12 cosets of a transposition."""
    gens = symmetric(4)
    swap = tuple([1, 0, 2, 3])
    action, deg = coset_action(gens, [swap], 4)
    assert deg == 12
    return action


def psl2_11():
    """PSL(2,11) on the projective line (12 points, infinity = 11)."""
    p = 11
    pts = list(range(p)) + ['inf']

    def idx(x):
        return p if x == 'inf' else x

    def shift(x):
        return 'inf' if x == 'inf' else (x + 1) % p

    def neginv(x):
        if x == 'inf':
            return 0
        if x == 0:
            return 'inf'
        return (-pow(x, p - 2, p)) % p

    return [tuple(idx(shift(x)) for x in pts), tuple(idx(neginv(x)) for x in pts)]


def entry(degree, ident, name, gens, order, stab_order):
    return {"degree": degree, "id": ident, "name": name, "gens": [list(g) for g in gens],
            "order": order, "stab": stab_order}


def core_entries():
    e = []
    e.append(entry(2, 1, "S2", cyclic(2), 2, 1))
    e.append(entry(3, 1, "C3", cyclic(3), 3, 1))
    e.append(entry(3, 2, "S3", symmetric(3), 6, 2))
    e.append(entry(4, 1, "C4", cyclic(4), 4, 1))
    e.append(entry(4, 2, "E4", product_regular([2, 2]), 4, 1))
    e.append(entry(4, 3, "D8", dihedral(4), 8, 2))
    e.append(entry(4, 4, "A4", alternating(4), 12, 3))
    e.append(entry(4, 5, "S4", symmetric(4), 24, 6))
    e.append(entry(5, 1, "C5", cyclic(5), 5, 1))
    e.append(entry(5, 2, "D10", dihedral(5), 10, 2))
    e.append(entry(5, 3, "F20", affine(5, 2), 20, 4))
    e.append(entry(5, 4, "A5", alternating(5), 60, 12))
    e.append(entry(5, 5, "S5", symmetric(5), 120, 24))
    e.append(entry(6, 1, "C6", cyclic(6), 6, 1))
    e.append(entry(6, 2, "S3reg", regular_rep(symmetric(3)), 6, 1))
    e.append(entry(6, 3, "S2xS3", grid_product([cyclic(2), symmetric(3)]), 12, 2))
    e.append(entry(6, 4, "A4_6", coset_action(alternating(4), [tuple([1, 0, 3, 2])], 4)[0], 12, 2))
    e.append(entry(6, 5, "PSL25_6", coset_action(alternating(5), dihedral_in_a5(), 5)[0], 60, 10))
    e.append(entry(6, 6, "PGL25_6", coset_action(symmetric(5), affine(5, 2), 5)[0], 120, 20))
    e.append(entry(7, 1, "C7", cyclic(7), 7, 1))
    e.append(entry(7, 2, "D14", dihedral(7), 14, 2))
    e.append(entry(7, 3, "F21", affine(7, 2), 21, 3))
    e.append(entry(7, 4, "F42", affine(7, 3), 42, 6))
    e.append(entry(7, 5, "L32_7", l32_points(), 168, 24))
    e.append(entry(7, 6, "A7", alternating(7), 2520, 360))
    e.append(entry(8, 1, "C8", cyclic(8), 8, 1))
    e.append(entry(8, 2, "C4xC2", product_regular([4, 2]), 8, 1))
    e.append(entry(8, 3, "E8", product_regular([2, 2, 2]), 8, 1))
    e.append(entry(8, 4, "D8reg", regular_rep(dihedral(4)), 8, 1))
    e.append(entry(8, 5, "Q8reg", quaternion_abstract(), 8, 1))
    e.append(entry(9, 1, "C9", cyclic(9), 9, 1))
    e.append(entry(9, 2, "E9", product_regular([3, 3]), 9, 1))
    e.append(entry(9, 3, "D18", dihedral(9), 18, 2))
    e.append(entry(10, 1, "C10", cyclic(10), 10, 1))
    e.append(entry(10, 2, "D10reg", regular_rep(dihedral(5)), 10, 1))
    e.append(entry(10, 3, "D20", dihedral(10), 20, 2))
    e.append(entry(10, 4, "F20_10", f20_on_10(), 20, 2))
    e.append(entry(10, 5, "A5_10", coset_action(alternating(5), s3_in_a5(), 5)[0], 60, 6))
    e.append(entry(11, 1, "C11", cyclic(11), 11, 1))
    e.append(entry(11, 2, "D22", dihedral(11), 22, 2))
    e.append(entry(12, 1, "C12", cyclic(12), 12, 1))
    e.append(entry(12, 2, "C2xC6", product_regular([2, 6]), 12, 1))
    e.append(entry(12, 3, "A4reg", regular_rep(alternating(4)), 12, 1))
    e.append(entry(12, 4, "D24", dihedral(12), 24, 2))
    e.append(entry(12, 5, "S4_12", s4_on_12(), 24, 2))
    e.append(entry(12, 6, "L211_12", psl2_11(), 660, 55))
    e.append(entry(18, 1, "S2xS3xS3", grid_product([cyclic(2), symmetric(3), symmetric(3)]), 72, 4))
    e.append(entry(21, 1, "L32_21", l32_flags(), 168, 8))
    e.append(entry(28, 1, "L32_28", l32_cosets_of_s3(), 168, 6))
    return e


def dihedral_in_a5():
    """A D10 inside A5 = <(01234), (14)(23)>."""
    return [tuple([1, 2, 3, 4, 0]), tuple([0, 4, 3, 2, 1])]


def s3_in_a5():
    """An S3 (= D6) inside A5 = <(012), (01)(34)>."""
    return [tuple([1, 2, 0, 3, 4]), tuple([1, 0, 2, 4, 3])]


def verify(ent):
    perms = [Permutation(g) for g in ent["gens"]]
    G = PermutationGroup(perms)
    assert G.degree == ent["degree"], (ent["name"], G.degree)
    assert G.order() == ent["order"], (ent["name"], G.order())
    assert G.is_transitive(), ent["name"]
    st = G.stabilizer(0)
    assert st.order() == ent["stab"], (ent["name"], st.order())


def fmt(ent):
    gens = ";".join("[" + ",".join(str(v) for v in g) + "]" for g in ent["gens"])
    return f'degree={ent["degree"]} id={ent["id"]} name={ent["name"]} gens={gens}'


def main():
    core = core_entries()
    seen = set()
    for ent in core:
        key = (ent["degree"], ent["id"])
        assert key not in seen
        seen.add(key)
        verify(ent)
        print(f'ok {ent["name"]}: degree {ent["degree"]} order {ent["order"]} stab {ent["stab"]}')

    with open("fixtures/core.catalog", "w") as f:
        f.write("# Bundled transitive-group catalog (generated by scripts/make_fixtures.py).\n")
        f.write("# One record per line: degree= id= name= gens=[images];[images]...\n")
        for ent in core:
            f.write(fmt(ent) + "\n")

    stretch = entry(315, 1, "L42_315", l42_borel_cosets(), 20160, 64)
    verify(stretch)
    print(f'ok {stretch["name"]}: degree 315 order {stretch["order"]} stab {stretch["stab"]}')
    with open("fixtures/stretch.catalog", "w") as f:
        f.write("# Optional large fixture: GL(4,2) on the 315 cosets of its Borel subgroup.\n")
        f.write(fmt(stretch) + "\n")
    print("fixtures written")


if __name__ == "__main__":
    sys.exit(main())
