"""Field and mask artifacts: 16-bit PGM, PNG, CSV and JSON sidecars."""

import json
import logging
from pathlib import Path

import numpy as np
from PIL import Image

from devils_coliseum.field.types import GridSpec, RegionMask, ScalarField

logger = logging.getLogger(__name__)

PGM_MAXVAL = 65535


def _to_uint16(values: np.ndarray, scale: float) -> np.ndarray:
    scaled = np.rint(np.clip(values / scale, 0.0, 1.0) * PGM_MAXVAL)
    return scaled.astype(">u2")


def write_pgm(path: Path, values: np.ndarray, comment: str = "", scale: float = 1.0) -> Path:
    """
    Binary 16-bit PGM of values / scale clipped to [0, 1].

    The comment (config hash, field kind) goes into the header, one line per entry.
    """
    height, width = values.shape
    header = b"P5\n"
    for line in comment.splitlines():
        header += f"# {line}\n".encode()
    header += f"{width} {height}\n{PGM_MAXVAL}\n".encode("ascii")

    with open(path, "wb") as handle:
        handle.write(header)
        handle.write(_to_uint16(values, scale).tobytes())
    logger.debug("Wrote %s", path)
    return path


def _pgm_header(data: bytes) -> tuple[int, int, int, int]:
    """Width, height, maxval and raster offset of a binary (P5) PGM."""
    numbers: list[int] = []
    pos = 2
    while len(numbers) < 3:
        while data[pos : pos + 1].isspace():
            pos += 1
        if data[pos : pos + 1] == b"#":
            pos = data.index(b"\n", pos) + 1
            continue
        end = pos
        while data[end : end + 1].isdigit():
            end += 1
        if end == pos:
            raise ValueError("malformed PGM header")
        numbers.append(int(data[pos:end]))
        pos = end
    width, height, maxval = numbers
    if not 0 < maxval < 65536:
        raise ValueError(f"PGM maxval {maxval} out of range")
    # One whitespace byte separates maxval from the raster.
    return width, height, maxval, pos + 1


def read_pgm(path: Path) -> np.ndarray:
    """
    Pixel values of a binary PGM (8- or 16-bit, any maxval) scaled to [0, 1].

    Other image formats go through Pillow.
    """
    data = Path(path).read_bytes()
    if data[:2] != b"P5":
        with Image.open(path) as image:
            maxval = PGM_MAXVAL if image.mode.startswith("I") else 255
            return np.asarray(image, dtype=np.float64) / maxval

    width, height, maxval, offset = _pgm_header(data)
    dtype = ">u2" if maxval > 255 else "u1"
    raster = np.frombuffer(data, dtype=dtype, count=width * height, offset=offset)
    return raster.reshape(height, width).astype(np.float64) / maxval


def write_field_pgm(path: Path, field: ScalarField, comment: str = "") -> Path:
    scale = 1.0
    if field.meta.get("kind") == "green":
        scale = max(float(field.values.max()), 1e-300)
        comment = f"{comment}\nscale {scale:.17g}".strip()
    return write_pgm(path, field.values, comment, scale)


def write_mask_pgm(path: Path, mask: RegionMask, comment: str = "") -> Path:
    return write_pgm(path, mask.bits.astype(np.float64), comment)


def read_mask(path: Path, grid: GridSpec, threshold: float = 0.5) -> RegionMask:
    """Load a PGM/PNG mask drawn for grid; pixels above threshold are set."""
    values = read_pgm(path)
    if values.ndim == 3:
        values = values.mean(axis=2)
    if values.shape != grid.shape:
        raise ValueError(f"mask {path} is {values.shape[1]}x{values.shape[0]}, grid is {grid.width}x{grid.height}")
    return RegionMask(grid, values > threshold)


def read_window_mask(
    path: Path,
    rect: tuple[float, float, float, float],
    threshold: float = 0.5,
) -> RegionMask:
    """Load a mask covering rect = (re_min, re_max, im_min, im_max) at the file's own resolution."""
    with Image.open(path) as image:
        width, height = image.size
    return read_mask(path, GridSpec(*rect, width, height), threshold)


def write_png(path: Path, values: np.ndarray, scale: float = 1.0) -> Path:
    """8-bit grayscale PNG via Pillow."""
    pixels = np.rint(np.clip(values / scale, 0.0, 1.0) * 255).astype(np.uint8)
    Image.fromarray(pixels).save(path)
    logger.debug("Wrote %s", path)
    return path


def write_field_csv(path: Path, field: ScalarField) -> Path:
    """One row per pixel: re, im, value, undecided."""
    z = field.grid.points().ravel()
    table = np.column_stack([z.real, z.imag, field.values.ravel(), field.undecided.ravel()])
    np.savetxt(path, table, delimiter=",", header="re,im,value,undecided", comments="", fmt="%.17g")
    return path


def write_points_csv(path: Path, points: np.ndarray) -> Path:
    points = np.asarray(points, dtype=np.complex128).ravel()
    table = np.column_stack([points.real, points.imag])
    np.savetxt(path, table, delimiter=",", header="re,im", comments="", fmt="%.17g")
    return path


def read_points_csv(path: Path) -> np.ndarray:
    table = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return table[:, 0] + 1j * table[:, 1]


def field_sidecar(field: ScalarField, config_hash: str = "") -> dict:
    payload = {"grid": field.grid.to_dict(), **field.meta}
    if config_hash:
        payload["config_hash"] = config_hash
    return payload


def write_json(path: Path, payload: dict) -> Path:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True, default=_json_default)
        handle.write("\n")
    logger.debug("Wrote %s", path)
    return path


def _json_default(value: object) -> object:
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"cannot serialise {type(value).__name__}")
