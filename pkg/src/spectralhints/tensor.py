"""Core tensor types and the 2D real FFT in the row-shifted half-spectrum layout.

Conventions, fixed once here and relied on everywhere else:

* Spatial signals are real C x H x W arrays in double precision, H and W even.
* Spectra are complex C x H x (W/2 + 1) arrays. Only the non-redundant half of
  the column axis is stored; the omitted columns are the reflected complex
  conjugate. The row axis is shifted so the zero-frequency row sits at index
  H/2 (column zero frequency stays at column 0). This makes the low-frequency
  region a contiguous block: rows [H/4, 3H/4), columns [0, W/4].
* The forward transform is unnormalized (the DC bin equals the sum of the
  spatial samples); the inverse applies the full 1/(H*W) factor, so
  inverse(forward(x)) == x.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ShapeError

SPECTRAL_LAYOUT_TAG = "row-shifted, DC at (H/2, 0)"


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(arr)
    if out is arr or out.base is arr:
        out = out.copy()
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class SpatialTensor:
    """Real-valued C x H x W signal. Immutable after construction."""

    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.float64)
        if arr.ndim != 3:
            raise ShapeError(f"spatial tensor must be 3-d (C, H, W), got shape {arr.shape}")
        c, h, w = arr.shape
        if c < 1:
            raise ShapeError("channel count must be positive")
        if h < 2 or w < 2 or h % 2 or w % 2:
            raise ShapeError(f"H and W must be even and >= 2, got {h}x{w}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("spatial tensor contains non-finite entries")
        object.__setattr__(self, "data", _frozen(arr))

    @property
    def channels(self) -> int:
        return self.data.shape[0]

    @property
    def height(self) -> int:
        return self.data.shape[1]

    @property
    def width(self) -> int:
        return self.data.shape[2]


@dataclass(frozen=True)
class SpectralTensor:
    """Complex C x H x (W/2+1) half-spectrum in the row-shifted layout."""

    data: np.ndarray = field(repr=False)
    layout_tag: str = SPECTRAL_LAYOUT_TAG

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.complex128)
        if arr.ndim != 3:
            raise ShapeError(f"spectral tensor must be 3-d (C, H, Wspec), got shape {arr.shape}")
        c, h, ws = arr.shape
        if c < 1:
            raise ShapeError("channel count must be positive")
        if h < 2 or h % 2:
            raise ShapeError(f"spectral height must be even and >= 2, got {h}")
        if ws < 2:
            raise ShapeError(f"spectral width must be >= 2, got {ws}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("spectral tensor contains non-finite entries")
        if self.layout_tag != SPECTRAL_LAYOUT_TAG:
            raise ValueError(f"unsupported spectral layout {self.layout_tag!r}")
        object.__setattr__(self, "data", _frozen(arr))

    @property
    def channels(self) -> int:
        return self.data.shape[0]

    @property
    def spec_height(self) -> int:
        return self.data.shape[1]

    @property
    def spec_width(self) -> int:
        return self.data.shape[2]

    @property
    def source_width(self) -> int:
        """Width of the real signal this half-spectrum describes."""
        return 2 * (self.spec_width - 1)


def forward_rfft2(x: SpatialTensor) -> SpectralTensor:
    """Per-channel 2D real FFT, rows shifted so DC lands at (H/2, 0).

    Unnormalized forward convention: the DC bin of a constant image of ones
    equals H*W.
    """
    spec = np.fft.rfft2(x.data, axes=(-2, -1))
    spec = np.fft.fftshift(spec, axes=-2)
    return SpectralTensor(spec)


def inverse_rfft2(s: SpectralTensor, target_width: int) -> SpatialTensor:
    """Exact inverse of :func:`forward_rfft2`; applies the 1/(H*W) factor."""
    if target_width != s.source_width:
        raise ShapeError(
            f"target_width {target_width} inconsistent with spectral width "
            f"{s.spec_width} (implies {s.source_width})"
        )
    spec = np.fft.ifftshift(s.data, axes=-2)
    out = np.fft.irfft2(spec, s=(s.spec_height, target_width), axes=(-2, -1))
    return SpatialTensor(out)


def spectral_axpy(alpha: complex, a: SpectralTensor, beta: complex, b: SpectralTensor) -> SpectralTensor:
    """Elementwise alpha*a + beta*b. Shapes must match."""
    if a.data.shape != b.data.shape:
        raise ShapeError(f"shape mismatch {a.data.shape} vs {b.data.shape}")
    return SpectralTensor(alpha * a.data + beta * b.data)


def hermitian_column_multiplicity(spec_width: int) -> np.ndarray:
    """How many times each stored column appears in the full spectrum.

    The DC column (0) and the Nyquist column (last) are their own conjugate
    reflection and count once; every interior column counts twice. This is the
    single source of truth for Parseval sums and half-spectrum adjoints.
    """
    mult = np.full(spec_width, 2.0)
    mult[0] = 1.0
    mult[-1] = 1.0
    return mult


def spectral_energy(s: SpectralTensor) -> float:
    """Sum of |bin|^2 over the full (conjugate-reflected) spectrum."""
    mult = hermitian_column_multiplicity(s.spec_width)
    return float(np.sum(mult * np.abs(s.data) ** 2))


def spatial_energy(x: SpatialTensor) -> float:
    return float(np.sum(x.data**2))
