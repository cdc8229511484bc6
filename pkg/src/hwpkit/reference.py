"""Reference kets used by the worked examples, the table reproduction and the noise runs.

Entries are stored to two or three significant digits, unnormalised, so
most are only approximately unit norm; callers normalise where the
computation requires it.
"""
import numpy as np

__all__ = ["FIDUCIAL_3", "KET_3", "ALT_FIDUCIALS_3", "FIDUCIAL_5", "KET_5", "LOOP_KET_3", "vectors"]

FIDUCIAL_3 = np.array([0.5, 0.4j, 0.77])
KET_3 = np.array([0.7j, 0.3, 0.64])
ALT_FIDUCIALS_3 = (np.array([0.6, -0.5, 0.66]), np.array([0.1, -0.5, 0.86]))
FIDUCIAL_5 = np.array([0.5, 0.4, 0.3j, 0.6, 0.37])
KET_5 = np.array([0.65, 0.3, -0.3, 0.5, 0.38j])
LOOP_KET_3 = np.array([0.3, 0.4j, 0.87])

for _v in (FIDUCIAL_3, KET_3, *ALT_FIDUCIALS_3, FIDUCIAL_5, KET_5, LOOP_KET_3):
    _v.setflags(write=False)


def vectors(d: int) -> tuple[np.ndarray, np.ndarray]:
    """``(ket, fiducial)`` for ``d`` in ``{3, 5}``."""
    if d == 3:
        return KET_3, FIDUCIAL_3
    if d == 5:
        return KET_5, FIDUCIAL_5
    raise ValueError(f"no reference vectors for d={d}")
