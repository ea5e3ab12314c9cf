"""2x2 complex matrices"""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict


class Matrix2C(BaseModel):
    """[[m11, m12], [m21, m22]]"""

    model_config = ConfigDict(frozen=True)

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    @classmethod
    def from_rows(cls, rows) -> "Matrix2C":
        (m11, m12), (m21, m22) = rows
        return cls(m11=complex(m11), m12=complex(m12), m21=complex(m21), m22=complex(m22))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "Matrix2C":
        return cls.from_rows([[complex(arr[0, 0]), complex(arr[0, 1])],
                              [complex(arr[1, 0]), complex(arr[1, 1])]])

    @classmethod
    def identity(cls) -> "Matrix2C":
        return cls(m11=1 + 0j, m12=0j, m21=0j, m22=1 + 0j)

    @classmethod
    def diag(cls, d1: complex, d2: complex) -> "Matrix2C":
        return cls(m11=complex(d1), m12=0j, m21=0j, m22=complex(d2))

    def to_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    def matmul(self, other: "Matrix2C") -> "Matrix2C":
        return Matrix2C.from_array(self.to_array() @ other.to_array())

    def det(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def inv(self) -> "Matrix2C":
        d = self.det()
        if d == 0:
            raise ZeroDivisionError("singular matrix")
        return Matrix2C(m11=self.m22 / d, m12=-self.m12 / d,
                        m21=-self.m21 / d, m22=self.m11 / d)

    def sub(self, other: "Matrix2C") -> "Matrix2C":
        return Matrix2C.from_array(self.to_array() - other.to_array())

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.to_array())))

    __matmul__ = matmul
    __sub__ = sub
