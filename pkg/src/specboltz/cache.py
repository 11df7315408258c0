"""Binary weight cache.

Layout (all little-endian)::

    offset  size  field
    0       4     magic b"BSPW"
    4       4     format version (u32)
    8       1     payload kind (u8): 1 = direct G table, 2 = fast F table + loss diagonal
    9       1     kernel tag (u8)
    10      24    kernel parameters b, gamma, eta (3 x f64)
    34      4     N (u32)
    38      4     N_r (u32)
    42      4     M (u32)
    46      8     L (f64)
    54      8     R (f64)
    62      ...   payload: (re, im) f64 pairs
    end-8   8     checksum of the payload bytes (u64)

Kind 2 payload: ``F(k, r_q, omega_s)`` with ``k`` outermost, then ``q``,
then ``s`` (empty for angle-independent kernels, whose ``F`` is closed
form), followed by the loss diagonal ``G(m, m)`` over ``m``. Kind 1 payload:
``G(l, m)`` with ``l`` outer. Wavenumber triples run in natural ascending
order, last component fastest. ``M`` is the number of ``omega`` nodes (0
for the reduced VHS direct table).

The checksum is the 8-byte BLAKE2b digest of the payload read as a u64.
"""

from __future__ import annotations

import hashlib
import math
import os
import struct
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._util import resolving_sphere_rule
from .direct import DirectWeights, precompute_G
from .errors import CacheError, ConfigurationError
from .fast import FastWeights, default_radial, precompute_F
from .grid import VelocityGrid
from .kernels import VHS, CollisionKernel
from .quadrature import gauss_legendre, lebedev

MAGIC = b"BSPW"
VERSION = 1
KIND_DIRECT = 1
KIND_FAST = 2

_HEADER = struct.Struct("<4sIBB3dIII2d")
_CHECKSUM = struct.Struct("<Q")
_PAIR = np.dtype("<c16")
_CHUNK = 1 << 22  # complex entries per write/hash chunk

HEADER_SIZE = _HEADER.size


@dataclass(frozen=True)
class CacheHeader:
    kind: int
    kernel_tag: int
    params: tuple[float, float, float]
    N: int
    N_r: int
    M: int
    L: float
    R: float
    version: int = VERSION

    def pack(self) -> bytes:
        return _HEADER.pack(MAGIC, self.version, self.kind, self.kernel_tag, *self.params,
                            self.N, self.N_r, self.M, self.L, self.R)

    @classmethod
    def unpack(cls, raw: bytes) -> "CacheHeader":
        if len(raw) < HEADER_SIZE:
            raise CacheError("file is shorter than the cache header")
        magic, version, kind, tag, b, g, e, N, N_r, M, L, R = _HEADER.unpack(raw[:HEADER_SIZE])
        if magic != MAGIC:
            raise CacheError(f"bad magic {magic!r}")
        return cls(kind, tag, (b, g, e), N, N_r, M, L, R, version)

    def payload_entries(self) -> int:
        n3 = self.N**3
        if self.kind == KIND_DIRECT:
            return n3 * n3
        if self.kind == KIND_FAST:
            f_entries = 0 if self.kernel_tag == 1 else n3 * self.N_r * self.M
            return f_entries + n3
        raise CacheError(f"unknown payload kind {self.kind}")

    def payload_bytes(self) -> int:
        return self.payload_entries() * _PAIR.itemsize


def fast_header(W: FastWeights) -> CacheHeader:
    g = W.grid
    return CacheHeader(KIND_FAST, W.kernel.tag, W.kernel.params(), g.N, W.N_r, W.M, g.L, g.R)


def direct_header(W: DirectWeights, N_r: int, M: int) -> CacheHeader:
    g = W.grid
    return CacheHeader(KIND_DIRECT, W.kernel.tag, W.kernel.params(), g.N, N_r, M, g.L, g.R)


def _write_payload(fh, blocks) -> int:
    h = hashlib.blake2b(digest_size=8)
    for arr in blocks:
        flat = np.ascontiguousarray(arr, dtype=_PAIR).reshape(-1)
        for i in range(0, flat.size, _CHUNK):
            chunk = flat[i:i + _CHUNK].tobytes()
            h.update(chunk)
            fh.write(chunk)
    return _CHECKSUM.unpack(h.digest())[0]


def _atomic_write(path: Path, header: CacheHeader, blocks) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(header.pack())
        digest = _write_payload(fh, blocks)
        fh.write(_CHECKSUM.pack(digest))
    os.replace(tmp, path)


def save_fast(path, W: FastWeights) -> CacheHeader:
    """Write fast weights. The F table is reordered to ``(k, q, s)``."""
    header = fast_header(W)
    blocks = []
    if W.F_table is not None:
        blocks.append(np.moveaxis(W.F_table, (0, 1), (3, 4)))
    blocks.append(W.loss_diag)
    _atomic_write(Path(path), header, blocks)
    return header


def save_direct(path, W: DirectWeights, N_r: int, M: int = 0) -> CacheHeader:
    """Write a dense direct table; the radial layout must be expanded first."""
    if W.G is None:
        raise ConfigurationError("only the dense direct layout can be cached")
    header = direct_header(W, N_r, M)
    _atomic_write(Path(path), header, [W.G])
    return header


def read_header(path) -> CacheHeader:
    with open(path, "rb") as fh:
        return CacheHeader.unpack(fh.read(HEADER_SIZE))


def read_payload(path) -> tuple[CacheHeader, np.ndarray]:
    """Header and verified payload as a flat complex array."""
    with open(path, "rb") as fh:
        header = CacheHeader.unpack(fh.read(HEADER_SIZE))
        if header.version != VERSION:
            raise CacheError(f"unsupported cache version {header.version}")
        nbytes = header.payload_bytes()
        payload = fh.read(nbytes)
        tail = fh.read(_CHECKSUM.size + 1)
    if len(payload) != nbytes or len(tail) != _CHECKSUM.size:
        raise CacheError(f"payload size mismatch in {path}: expected {nbytes} bytes")
    h = hashlib.blake2b(payload, digest_size=8)
    if _CHECKSUM.unpack(h.digest())[0] != _CHECKSUM.unpack(tail)[0]:
        raise CacheError(f"checksum mismatch in {path}")
    return header, np.frombuffer(payload, dtype=_PAIR).astype(complex)


def load_fast(path, grid: VelocityGrid, kernel: CollisionKernel, N_r: int, M: int) -> FastWeights:
    """Rebuild :class:`FastWeights` from a cache written for the default rules."""
    header, flat = read_payload(path)
    expected = CacheHeader(KIND_FAST, kernel.tag, kernel.params(), grid.N, N_r, M, grid.L, grid.R)
    if header != expected:
        raise CacheError(f"cache header {header} does not match {expected}")
    N = grid.N
    n3 = N**3
    radial = default_radial(grid, N_r)
    sphere = lebedev(M)
    diag = flat[-n3:].reshape(N, N, N).copy()
    if kernel.tag == 1:
        profile = np.array([kernel(float(r), 1.0) for r in radial.nodes])
        return FastWeights(grid, kernel, radial, sphere, diag, radial_profile=profile)
    table = np.moveaxis(flat[:-n3].reshape(N, N, N, N_r, M), (3, 4), (0, 1))
    return FastWeights(grid, kernel, radial, sphere, diag, F_table=np.ascontiguousarray(table))


def load_direct(path, grid: VelocityGrid, kernel: CollisionKernel, N_r: int, M: int = 0) -> DirectWeights:
    header, flat = read_payload(path)
    expected = CacheHeader(KIND_DIRECT, kernel.tag, kernel.params(), grid.N, N_r, M, grid.L, grid.R)
    if header != expected:
        raise CacheError(f"cache header {header} does not match {expected}")
    n3 = grid.N**3
    G = flat.reshape(n3, n3)
    # the reduced VHS table is real; keep it real so evaluation is bit-identical
    if M == 0 and not np.any(G.imag):
        G = np.ascontiguousarray(G.real)
    diag = G[np.arange(n3), np.arange(n3)].reshape(grid.shape).astype(complex)
    return DirectWeights(grid, kernel, diag, G=G)


def _matches(path: Path, expected: CacheHeader) -> bool:
    try:
        header = read_header(path)
    except (OSError, CacheError) as exc:
        warnings.warn(f"ignoring unreadable cache {path}: {exc}", stacklevel=3)
        return False
    if header != expected:
        warnings.warn(f"cache {path} was written for a different configuration; recomputing",
                      stacklevel=3)
        return False
    return True


def cached_fast(path, grid: VelocityGrid, kernel: CollisionKernel, N_r: int, M: int,
                mem_cap: int | None = None) -> tuple[FastWeights, bool]:
    """Load fast weights from ``path`` or compute and store them.

    Returns ``(weights, hit)``. A header mismatch recomputes with a warning;
    a checksum failure raises :class:`CacheError`.
    """
    path = Path(path)
    expected = CacheHeader(KIND_FAST, kernel.tag, kernel.params(), grid.N, N_r, M, grid.L, grid.R)
    if path.exists() and _matches(path, expected):
        return load_fast(path, grid, kernel, N_r, M), True
    kw = {} if mem_cap is None else {"mem_cap": mem_cap}
    W = precompute_F(grid, kernel, default_radial(grid, N_r), lebedev(M), **kw)
    save_fast(path, W)
    return W, False


def cached_direct(path, grid: VelocityGrid, kernel: CollisionKernel, N_r: int,
                  mem_cap: int | None = None) -> tuple[DirectWeights, bool]:
    """Direct counterpart of :func:`cached_fast` (dense layout, default rules)."""
    path = Path(path)
    M = 0 if isinstance(kernel, VHS) else _omega_count(grid)
    expected = CacheHeader(KIND_DIRECT, kernel.tag, kernel.params(), grid.N, N_r, M, grid.L, grid.R)
    if path.exists() and _matches(path, expected):
        return load_direct(path, grid, kernel, N_r, M), True
    kw = {} if mem_cap is None else {"mem_cap": mem_cap}
    W = precompute_G(grid, kernel, gauss_legendre(N_r, 0.0, grid.R), **kw)
    save_direct(path, W, N_r, M)
    return W, False


def _omega_count(grid: VelocityGrid) -> int:
    """Point count of the sphere rule the general direct path picks by default."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return len(resolving_sphere_rule(math.pi * grid.R * math.sqrt(3.0) * grid.N / (2.0 * grid.L)))
