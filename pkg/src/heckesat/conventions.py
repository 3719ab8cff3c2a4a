"""Shared sign and normalization conventions.

Every module that touches the torus identification imports its signs
from here, so exactly one choice exists in the codebase.

1. Cocharacter vs torus coset.  A cocharacter chi of the diagonal torus
   corresponds to the coset of chi(pi**-1), where pi is the uniformizer.
   Concretely diag(p**v_1, ..., p**v_n) * T(Z_p) is labeled by the
   exponent chi = (-v_1, ..., -v_n).  ``TORUS_SIGN`` records this.

2. Modulus twist.  The numeric Satake transform multiplies the
   coefficient at exponent chi by v**(<delta, chi>) with delta the sum
   of positive roots and v**2 = p.  ``DELTA_TWIST_SIGN`` records the
   exponent sign of that twist; flipping it breaks the homomorphism
   property, which the test suite uses as the arbiter.

3. Reflection between the two Satake sides.  The symbolic Hecke
   polynomial writes orbit exponentials with dominant (nonnegative)
   exponents, while the numeric transform of a nonnegative-type double
   coset produces nonpositive exponents under convention 1.  The two
   sides agree after the single reflection lam -> -lam; ``reflect``
   applies it.

4. Minuscule weight orbits.  The construction of the Hecke polynomial
   as prod_{lam in W.mu} (t - v**d e^lam) relies on the classical
   theorem that the weights of the irreducible representation of the
   dual group with minuscule highest weight mu form exactly one Weyl
   orbit, each with multiplicity one.  This licenses replacing the
   characteristic polynomial of that representation by the orbit
   product; no matrix representation is ever built.

5. Central shift.  Left cosets factor as p**c times a matrix whose
   entries share no p; the exponent c is carried separately and added
   back to diagonal valuations and elementary-divisor types.
"""

# diag(p**v_i) is the image of chi(pi**-1) for chi = -v
TORUS_SIGN = -1

# coefficient at exponent chi is twisted by v**(DELTA_TWIST_SIGN * <delta, chi>)
DELTA_TWIST_SIGN = +1


def reflect(x):
    """Apply the exponent reflection lam -> -lam to a group algebra element."""
    from .satake import GroupAlgebraElement
    return GroupAlgebraElement(
        x.rank, {tuple(-v for v in lam): c for lam, c in x.terms.items()})
