"""Kernel selection: compiled extension if available, pure Python otherwise.

Set POSRING_PURE_PYTHON=1 to force the pure Python kernels even when the
compiled extension is installed.
"""

import os

if os.environ.get("POSRING_PURE_PYTHON") == "1":
    from posring import _kernels_py as _impl
else:
    try:
        from posring import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from posring import _kernels_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION

norm = _impl.norm
add = _impl.add
sub = _impl.sub
neg = _impl.neg
scale = _impl.scale
mul = _impl.mul
mul_xk = _impl.mul_xk
deriv = _impl.deriv
exact_div = _impl.exact_div
content = _impl.content
primitive_signed = _impl.primitive_signed
primitive_pos = _impl.primitive_pos
pseudo_rem = _impl.pseudo_rem
gcd = _impl.gcd
signed_prs = _impl.signed_prs
eval_scaled = _impl.eval_scaled
sign_variations = _impl.sign_variations
var_at = _impl.var_at
var_at_posinf = _impl.var_at_posinf
shift1 = _impl.shift1
strip2 = _impl.strip2
gcd_mod = _impl.gcd_mod
