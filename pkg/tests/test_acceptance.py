"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

The instance census is every admissible pair with q**n <= 1024 and n >= 2;
trivial pairs get their own criterion at the end.
"""

import time
from contextlib import contextmanager
from functools import lru_cache

import numpy as np

import conftest
from dicksonlab import (
    bracket_mod,
    build_coset_table,
    build_field,
    build_nearfield,
    center,
    center_formula,
    enumerate_pairs,
    is_prime,
    kernel,
    kernel_oracle,
    verify_axioms,
    verify_bracket_lemma,
    verify_center_theorems,
    verify_coupling,
    verify_structure,
)
from dicksonlab.nearfield import KERNEL_ORACLE_CAP

INSTANCES = [
    (3, 2), (5, 2), (7, 2), (4, 3), (9, 2), (11, 2), (13, 2), (17, 2),
    (7, 3), (19, 2), (23, 2), (5, 4), (25, 2), (27, 2), (29, 2), (31, 2),
]


@lru_cache(maxsize=None)
def nf_for(q, n, u=1):
    return build_nearfield(q, n, generator_dlog=u)


@contextmanager
def criterion(num, label):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as e:
        conftest.CRITERION_LINES.append(
            f"criterion {num}: FAIL - {label}: {type(e).__name__}: {e}"
        )
        raise
    dt = time.perf_counter() - t0
    conftest.CRITERION_LINES.append(
        f"criterion {num}: PASS - {label} ({dt:.2f}s)"
    )


def test_criterion_1_center_is_the_ground_subfield():
    with criterion(1, "center equals the order-q subfield on all 16 instances"):
        pairs = enumerate_pairs(1024, min_n=2)
        assert [(p.q, p.n) for p in pairs] == INSTANCES
        t0 = time.perf_counter()
        for p in pairs:
            nf = nf_for(p.q, p.n)
            c = center(nf)
            assert c == center_formula(nf), (p.q, p.n)
            assert len(c) == p.q, (p.q, p.n)
            assert c[0] == 0 and 1 in c
        assert time.perf_counter() - t0 < 10.0


def test_criterion_2_kernel_equals_center():
    with criterion(2, "kernel equals center; brute-force oracle agrees up to 343"):
        t0 = time.perf_counter()
        checked = 0
        for q, n in INSTANCES:
            nf = nf_for(q, n)
            k = kernel(nf)
            assert k == center(nf), (q, n)
            if nf.order <= KERNEL_ORACLE_CAP:
                assert kernel_oracle(nf) == k, (q, n)
                checked += 1
        assert checked == 9
        assert time.perf_counter() - t0 < 30.0


def test_criterion_3_axiom_scan_with_witnesses():
    with criterion(3, "laws hold as expected; both failures carry live witnesses"):
        for q, n in INSTANCES:
            nf = nf_for(q, n)
            mode = "exhaustive" if nf.order <= 729 else "auto"
            rep = verify_axioms(nf, mode=mode)
            for name, v in rep.axioms.items():
                assert v.holds == rep.expected_holds(name), (q, n, name)
            a, b, lam = rep.axioms["right_distributive"].witness
            lhs = nf.circle(nf.field.add(a, b), lam)
            rhs = nf.field.add(nf.circle(a, lam), nf.circle(b, lam))
            assert lhs != rhs, (q, n)
            x, y = rep.axioms["circle_commutative"].witness
            assert nf.circle(x, y) != nf.circle(y, x), (q, n)


def test_criterion_4_bracket_identities_for_every_pair():
    with criterion(4, "bracket divisibility and residue bijection up to 2**20"):
        t0 = time.perf_counter()
        pairs = enumerate_pairs(1 << 20)
        assert len(pairs) == 82482
        for p in pairs:
            build_coset_table(p)  # raises unless residues are a bijection
            assert bracket_mod(p.n, p.q, p.n) == 0
        assert time.perf_counter() - t0 < 1.0
        # element-level restatement on the built instances
        for q, n in INSTANCES:
            out = verify_bracket_lemma(nf_for(q, n))
            assert all(out.values()), (q, n, out)


def test_criterion_5_generator_power_generates_everything():
    with criterion(5, "the n-th generator power generates the whole field"):
        for q, n in INSTANCES:
            nf = nf_for(q, n)
            fld = nf.field
            gn = fld.pow(nf.generator, n)
            sub = fld.generated_subfield(gn)
            assert sub.degree == nf.pair.l * n, (q, n)
            assert len(sub.elements) == nf.order
            assert verify_center_theorems(nf)["generated_subfield_degree_full"]


def test_criterion_6_coupling_acts_by_automorphisms():
    with criterion(6, "twists are automorphisms composing by index addition (<= 343)"):
        done = 0
        for q, n in INSTANCES:
            nf = nf_for(q, n)
            if nf.order > 343:
                continue
            out = verify_coupling(nf)
            assert all(out.values()), (q, n, out)
            done += 1
        assert done == 9


def test_criterion_7_frobenius_and_subfield_sizes():
    with criterion(7, "freshman identity and subfield sizes in every field up to 289"):
        fields = []
        for p in range(2, 290):
            if not is_prime(p):
                continue
            m = 1
            while p**m <= 289:
                fields.append((p, m))
                m += 1
        assert len(fields) == 78
        for p, m in fields:
            tb = build_field(p, m)
            N = tb.order
            digs = np.array([tb.decode(c) for c in range(N)], dtype=np.int64)
            place = p ** np.arange(m, dtype=np.int64)
            S = ((digs[:, None, :] + digs[None, :, :]) % p) @ place
            exp = np.array(tb.exp, dtype=np.int64)
            log = np.array([0] + [tb.log[c] for c in range(1, N)], dtype=np.int64)
            M = np.zeros((N, N), dtype=np.int64)
            if N > 2:
                M[1:, 1:] = exp[(log[1:, None] + log[None, 1:]) % (N - 1)]
            elif N == 2:
                M[1, 1] = 1
            for s in range(1, m + 1):
                P = np.array([tb.frobenius(c, s) for c in range(N)])
                assert (P[S] == S[P[:, None], P[None, :]]).all(), (p, m, s)
                assert (P[M] == M[P[:, None], P[None, :]]).all(), (p, m, s)
            for s in range(1, m + 1):
                if m % s == 0:
                    assert len(tb.fixed_field(s)) == p**s, (p, m, s)


def test_criterion_8_generator_choice_is_immaterial():
    with criterion(8, "rebased generators leave center and kernel unchanged"):
        for (q, n, u) in [(3, 2, 3), (5, 2, 7), (9, 2, 7)]:
            base = nf_for(q, n)
            other = nf_for(q, n, u)
            assert other.generator != base.generator
            assert center(other) == center(base), (q, n, u)
            assert kernel(other) == kernel(base), (q, n, u)
            assert verify_structure(other).passed, (q, n, u)


def test_criterion_9_trivial_pairs_recover_the_field():
    with criterion(9, "n = 1 instances are plain fields; nothing fails"):
        for q in (2, 3, 4, 5, 7, 8, 9):
            nf = nf_for(q, 1)
            rep = verify_structure(nf)
            assert rep.passed, q
            assert rep.axioms["right_distributive"].holds
            assert rep.axioms["circle_commutative"].holds
            assert rep.center == list(range(q))
            assert np.array_equal(nf.circle_table(), nf.mul_table())
