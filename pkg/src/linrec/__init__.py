"""Coefficients of rational power series and terms of linear recurrences."""
from .apps import (
    FibState,
    SquareMatrix,
    char_poly,
    fib_new,
    fib_pow2,
    matrix_pow,
    matrix_pow_binary,
    poly_at_matrix,
)
from .errors import (
    LinrecError,
    NotInvertibleError,
    PreconditionError,
    RingMismatchError,
    UnsupportedRootOrderError,
)
from .kernel import (
    LinRec,
    RationalSeries,
    SequenceSlice,
    graeffe_step,
    linrec_from_rational,
    many_coeff_msb,
    one_coeff_fft,
    one_coeff_lsb,
    one_coeff_msb,
    one_term,
    rational_from_linrec,
    slice_coeff_msb,
)
from .modexp import (
    ModulusPoly,
    fiduccia_term,
    initial_segment,
    initial_segment_naive,
    modexp_binary,
    modexp_new,
    new_fiduccia_slice,
)
from .ntt import (
    DftVector,
    dft_double,
    dft_forward,
    dft_halve_even,
    dft_halve_odd,
    dft_inverse,
    fft_poly_mul,
)
from .poly import (
    DensePoly,
    MulConfig,
    poly_alternate,
    poly_divrem,
    poly_even_part,
    poly_middle_product,
    poly_mul,
    poly_odd_part,
    poly_reversal,
    series_expand,
    series_inverse,
)
from .ring import (
    NTT_PRIME,
    ZZ,
    CountingRing,
    IntegerRing,
    ModRing,
    OpCounter,
    PrimeField,
    RingElement,
    default_field,
)

__version__ = "0.1.0"
