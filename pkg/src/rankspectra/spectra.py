"""Sample spectra: covariance and correlation eigenvalues, tail means, data I/O."""

from __future__ import annotations

import csv
import io
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import linalg

from .errors import DegenerateColumnError, NumericalError, RangeError, ValidationError

__all__ = [
    "EigenSpectrum",
    "as_data_matrix",
    "cov_eigenvalues",
    "diag_covariance",
    "corr_eigenvalues",
    "tail_mean",
    "read_csv_matrix",
    "read_binary_matrix",
    "write_binary_matrix",
    "read_eigenvalue_file",
]

SOURCES = ("covariance", "correlation", "external")


@dataclass(frozen=True)
class EigenSpectrum:
    """Descending sample eigenvalues of a p x p matrix built from n observations."""

    eigenvalues: np.ndarray
    n: int
    p: int
    source: str = "covariance"

    def __post_init__(self) -> None:
        ev = np.array(self.eigenvalues, dtype=float).reshape(-1)
        if ev.size != self.p:
            raise ValidationError(f"expected {self.p} eigenvalues, got {ev.size}")
        if self.n < 2 or self.p < 1:
            raise ValidationError("need n >= 2 and p >= 1")
        if self.source not in SOURCES:
            raise ValidationError(f"unknown spectrum source {self.source!r}")
        if not np.all(np.isfinite(ev)):
            raise ValidationError("eigenvalues must be finite")
        if np.any(ev < 0):
            raise ValidationError("eigenvalues must be nonnegative")
        if np.any(np.diff(ev) > 0):
            raise ValidationError("eigenvalues must be sorted in descending order")
        ev.setflags(write=False)
        object.__setattr__(self, "eigenvalues", ev)

    @classmethod
    def from_values(cls, values, n: int, p: int | None = None, source: str = "external") -> EigenSpectrum:
        """Sort ``values`` descending and wrap them."""
        ev = np.sort(np.asarray(values, dtype=float).reshape(-1))[::-1]
        return cls(ev, int(n), int(ev.size if p is None else p), source)

    def scaled(self, factor: float) -> EigenSpectrum:
        return EigenSpectrum(self.eigenvalues * factor, self.n, self.p, self.source)

    def __len__(self) -> int:
        return self.p


def as_data_matrix(X) -> np.ndarray:
    """Validate an n x p data matrix (n >= 2, p >= 1, finite entries)."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise ValidationError("data matrix must be two-dimensional")
    n, p = X.shape
    if n < 2 or p < 1:
        raise ValidationError("data matrix needs at least 2 rows and 1 column")
    if not np.all(np.isfinite(X)):
        raise ValidationError("data matrix contains non-finite entries")
    return X


def _sym_eigvals(M: np.ndarray) -> np.ndarray:
    try:
        return linalg.eigvalsh(M, check_finite=False)
    except (linalg.LinAlgError, ValueError) as exc:
        raise NumericalError(f"eigensolver failed: {exc}") from exc


def _spectrum_of_crossproduct(Y: np.ndarray, divisor: float) -> np.ndarray:
    """Descending eigenvalues of ``Y^T Y / divisor`` (p of them), via the smaller Gram side."""
    n, p = Y.shape
    if p <= n:
        ev = _sym_eigvals(Y.T @ Y / divisor)
    else:
        ev = np.concatenate([np.zeros(p - n), _sym_eigvals(Y @ Y.T / divisor)])
    ev = np.sort(ev)[::-1]
    top = ev[0] if ev.size else 0.0
    # roundoff-level eigenvalues (including tiny negatives) are exact zeros
    ev[ev <= max(n, p) * np.finfo(float).eps * max(top, 0.0)] = 0.0
    return ev


def cov_eigenvalues(X, centered: bool = True, divisor: str = "n-1") -> EigenSpectrum:
    """Eigenvalues of the sample covariance matrix of ``X`` (rows = observations).

    ``divisor`` is ``"n-1"`` (default) or ``"n"``.  With ``centered=False`` the
    matrix is ``X^T X / divisor``.
    """
    X = as_data_matrix(X)
    n, p = X.shape
    if divisor not in ("n-1", "n"):
        raise ValidationError("divisor must be 'n-1' or 'n'")
    d = n - 1 if divisor == "n-1" else n
    Y = X - X.mean(axis=0) if centered else X
    return EigenSpectrum(_spectrum_of_crossproduct(Y, d), n, p, "covariance")


def diag_covariance(X, centered: bool = True, divisor: str = "n-1") -> np.ndarray:
    """Diagonal of the sample covariance matrix (column variances)."""
    X = as_data_matrix(X)
    n = X.shape[0]
    d = n - 1 if divisor == "n-1" else n
    Y = X - X.mean(axis=0) if centered else X
    return np.einsum("ij,ij->j", Y, Y) / d


def corr_eigenvalues(X) -> EigenSpectrum:
    """Eigenvalues of the sample correlation matrix of ``X``."""
    X = as_data_matrix(X)
    n, p = X.shape
    Y = X - X.mean(axis=0)
    ss = np.einsum("ij,ij->j", Y, Y)
    scale = np.abs(X).max(axis=0) ** 2 * n
    bad = ss <= 1e-24 * np.maximum(scale, np.finfo(float).tiny)
    if np.any(bad):
        raise DegenerateColumnError(f"columns with zero variance: {np.flatnonzero(bad).tolist()}")
    Z = Y / np.sqrt(ss)
    return EigenSpectrum(_spectrum_of_crossproduct(Z, 1.0), n, p, "correlation")


def tail_mean(spec: EigenSpectrum, r: int) -> float:
    """Mean of the trailing ``p - r`` eigenvalues."""
    if not 0 <= r < spec.p:
        raise RangeError(f"r must satisfy 0 <= r < p={spec.p}, got {r}")
    return float(spec.eigenvalues[r:].mean())


# -- file formats ---------------------------------------------------------------


def read_csv_matrix(path: str | Path) -> np.ndarray:
    """Read a numeric CSV (rows = observations); a single non-numeric header row is skipped."""
    text = Path(path).read_text()
    rows = [row for row in csv.reader(io.StringIO(text)) if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ValidationError(f"{path}: empty CSV")

    def parse(row: list[str]) -> list[float]:
        return [float(cell) for cell in row]

    try:
        data = [parse(rows[0])]
    except ValueError:
        data = []
    try:
        data.extend(parse(row) for row in rows[1:])
    except ValueError as exc:
        raise ValidationError(f"{path}: non-numeric entry ({exc})") from None
    if not data:
        raise ValidationError(f"{path}: no data rows")
    width = {len(row) for row in data}
    if len(width) != 1:
        raise ValidationError(f"{path}: ragged rows (widths {sorted(width)})")
    return as_data_matrix(np.array(data))


_HEADER = struct.Struct("<II")


def read_binary_matrix(path: str | Path) -> np.ndarray:
    """Read the binary format: little-endian uint32 (n, p) then n*p float64 in column-major order."""
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size:
        raise ValidationError(f"{path}: truncated header")
    n, p = _HEADER.unpack_from(raw)
    body = raw[_HEADER.size:]
    if len(body) != 8 * n * p:
        raise ValidationError(f"{path}: expected {n}x{p} float64 values, found {len(body)} bytes")
    X = np.frombuffer(body, dtype="<f8").reshape((n, p), order="F")
    return as_data_matrix(X.copy())


def write_binary_matrix(path: str | Path, X) -> None:
    """Inverse of :func:`read_binary_matrix`."""
    X = np.asarray(X, dtype="<f8")
    n, p = X.shape
    Path(path).write_bytes(_HEADER.pack(n, p) + X.tobytes(order="F"))


def read_eigenvalue_file(path: str | Path) -> EigenSpectrum:
    """Read an eigenvalue file.

    The first non-blank, non-``#`` line holds ``n,p`` (comma or whitespace
    separated); every following line holds one eigenvalue.  The number of
    eigenvalues must equal ``p``.
    """
    lines = [
        ln.strip() for ln in Path(path).read_text().splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ValidationError(f"{path}: empty eigenvalue file")
    header = lines[0].replace(",", " ").split()
    try:
        n, p = (int(v) for v in header)
    except ValueError:
        raise ValidationError(f"{path}: first line must be 'n,p'") from None
    try:
        values = np.array([float(ln) for ln in lines[1:]])
    except ValueError as exc:
        raise ValidationError(f"{path}: bad eigenvalue line ({exc})") from None
    if values.size != p:
        raise ValidationError(f"{path}: header says p={p} but {values.size} eigenvalues given")
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        raise ValidationError(f"{path}: eigenvalues must be finite and nonnegative")
    if np.any(np.diff(values) > 0):
        raise ValidationError(f"{path}: eigenvalues must be listed in descending order")
    return EigenSpectrum(values, n, p, "external")
