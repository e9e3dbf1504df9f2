import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posring import _kernels_py as pure
from posring import kernels

try:
    from posring import _kernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None,
                                    reason="compiled kernels not built")

MERSENNE = (1 << 61) - 1

coeff = st.integers(min_value=-(2 ** 192), max_value=2 ** 192)
raw = st.lists(coeff, max_size=8)
canon = raw.map(lambda cs: pure.norm(list(cs)))
nonzero = canon.filter(lambda cs: bool(cs))


def both(fn_name, *args):
    a = getattr(pure, fn_name)(*[_copy(x) for x in args])
    b = getattr(compiled, fn_name)(*[_copy(x) for x in args])
    return a, b


def _copy(x):
    return list(x) if isinstance(x, list) else x


def test_selector_exposes_one_implementation():
    assert kernels.IMPLEMENTATION in ("python", "c")
    assert pure.IMPLEMENTATION == "python"


@needs_compiled
def test_compiled_is_distinct():
    assert compiled.IMPLEMENTATION == "c"


def test_env_forces_pure(tmp_path):
    env = dict(os.environ, POSRING_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from posring import kernels; print(kernels.IMPLEMENTATION)"],
        capture_output=True, text=True, env=env)
    assert out.stdout.strip() == "python"


# ------------------------------------------------- pairwise equivalence


@needs_compiled
@given(raw)
def test_norm_equivalent(cs):
    assert pure.norm(list(cs)) == compiled.norm(list(cs))


@needs_compiled
@given(canon, canon)
def test_ring_ops_equivalent(a, b):
    for name in ("add", "sub", "mul"):
        x, y = both(name, a, b)
        assert x == y, name
    for name in ("neg", "deriv"):
        x, y = both(name, a)
        assert x == y, name


@needs_compiled
@given(canon, st.integers(-9, 9), st.integers(0, 6))
def test_scale_and_shift_equivalent(a, k, e):
    assert both("scale", a, k)[0] == both("scale", a, k)[1]
    assert both("mul_xk", a, e)[0] == both("mul_xk", a, e)[1]


@needs_compiled
@given(canon, nonzero)
def test_exact_div_equivalent(q, b):
    a = pure.mul(q, b)
    assert compiled.exact_div(list(a), list(b)) == q
    # non-multiples must fail identically
    a2 = pure.add(a, [1])
    assert pure.exact_div(list(a2), list(b)) == compiled.exact_div(list(a2), list(b))


@needs_compiled
@given(canon)
def test_content_primitive_equivalent(a):
    for name in ("content", "primitive_signed", "primitive_pos", "strip2"):
        x, y = both(name, a)
        assert x == y, name


@needs_compiled
@given(nonzero, nonzero)
def test_pseudo_rem_equivalent(a, b):
    if len(a) < len(b):
        a, b = b, a
    x, y = both("pseudo_rem", a, b)
    assert x == y


@needs_compiled
@given(canon, canon)
def test_gcd_equivalent(a, b):
    x, y = both("gcd", a, b)
    assert x == y
    ga = pure.mul(a, [3, 3]) if a else a
    gb = pure.mul(b, [3, 3]) if b else b
    x, y = both("gcd", ga, gb)
    assert x == y


@needs_compiled
@settings(max_examples=60)
@given(nonzero)
def test_signed_prs_equivalent(p):
    x, y = both("signed_prs", p)
    assert x == y


@needs_compiled
@given(nonzero, st.integers(-50, 50), st.integers(1, 16))
def test_eval_and_variations_equivalent(p, num, den):
    assert both("eval_scaled", p, num, den)[0] == both("eval_scaled", p, num, den)[1]
    chain = pure.signed_prs(p)
    assert pure.var_at(chain, num, den) == compiled.var_at(chain, num, den)
    assert pure.var_at_posinf(chain) == compiled.var_at_posinf(chain)


@needs_compiled
@given(st.lists(st.integers(-5, 5), max_size=10))
def test_sign_variations_equivalent(vals):
    assert pure.sign_variations(list(vals)) == compiled.sign_variations(list(vals))


@needs_compiled
@given(nonzero)
def test_shift1_equivalent(p):
    x, y = both("shift1", p)
    assert x == y
    # spot-check the meaning: p(X+1) at 0 equals p(1)
    assert pure.eval_scaled(x, 0, 1) == pure.eval_scaled(p, 1, 1)


@needs_compiled
@given(nonzero, nonzero)
def test_gcd_mod_equivalent(a, b):
    x = pure.gcd_mod(list(a), list(b), MERSENNE)
    y = compiled.gcd_mod(list(a), list(b), MERSENNE)
    assert x == y


@needs_compiled
def test_gcd_mod_leading_drop_refused():
    # leading coefficient divisible by the modulus makes the result None
    a = [1, MERSENNE]
    assert pure.gcd_mod(a, [1, 1], MERSENNE) is None
    assert compiled.gcd_mod(a, [1, 1], MERSENNE) is None
