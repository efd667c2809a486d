"""Parameter profiles and derived quantities shared by both parties."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .cwencode import kappa as _kappa


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class CommonParams:
    name: str
    # sender (ternary (U, U+V) code)
    n_s: int
    k_U: int
    k_V: int
    omega: int
    # receiver (binary Goppa subcode)
    m: int
    n_r: int
    t: int
    k_tilde: int
    # symmetric key bits and signature salt bits
    ell: int
    salt_bits: int
    q: int = 3

    @property
    def k_s(self) -> int:
        return self.k_U + self.k_V

    @property
    def r_s(self) -> int:
        return self.n_s - self.k_s

    @property
    def k_r(self) -> int:
        return self.n_r - self.m * self.t

    @property
    def kappa(self) -> int:
        return _kappa(self.n_r, self.t)

    def validate(self) -> "CommonParams":
        if self.n_s % 2:
            raise ParameterError("n_s must be even")
        half = self.n_s // 2
        if not (0 < self.k_U < half and 0 < self.k_V < half):
            raise ParameterError("need 0 < k_U, k_V < n_s/2")
        if not 0 < self.omega <= self.n_s:
            raise ParameterError("need 0 < omega <= n_s")
        if not 2 <= self.m <= 16:
            raise ParameterError("extension degree must be in [2, 16]")
        if self.n_r > (1 << self.m):
            raise ParameterError("n_r exceeds 2^m")
        if self.t < 1:
            raise ParameterError("t must be >= 1")
        if not 1 <= self.k_tilde <= self.k_r:
            raise ParameterError("need 1 <= k_tilde <= n_r - m*t")
        if self.ell < 1 or self.salt_bits < 1:
            raise ParameterError("ell and salt_bits must be >= 1")
        if self.q != 3:
            raise ParameterError("only the ternary instantiation is supported")
        return self


TOY = CommonParams(
    name="toy",
    n_s=16, k_U=4, k_V=4, omega=14,
    m=5, n_r=32, t=2, k_tilde=16,
    ell=16, salt_bits=16,
)

# NIST level-1 scale; describable (sizes, estimates) but not meant for
# desk-scale cryptographic runs.
PAPER_L1 = CommonParams(
    name="paper-l1",
    n_s=8492, k_U=3558, k_V=2047, omega=7980,
    m=12, n_r=3488, t=64, k_tilde=1815,
    ell=512, salt_bits=256,
)

PROFILES = {"toy": TOY, "paper-l1": PAPER_L1}
PROFILE_IDS = {"toy": 0x01, "paper-l1": 0x02, "custom": 0x7F}
PROFILE_BY_ID = {v: k for k, v in PROFILE_IDS.items()}

_CUSTOM_FIELDS = ("n_s", "k_U", "k_V", "omega", "m", "n_r", "t",
                  "k_tilde", "ell", "salt_bits")


def custom_params(values: dict[str, int], name: str = "custom") -> CommonParams:
    unknown = set(values) - set(_CUSTOM_FIELDS)
    if unknown:
        raise ParameterError(f"unknown parameters: {sorted(unknown)}")
    missing = set(_CUSTOM_FIELDS) - set(values)
    if missing:
        raise ParameterError(f"missing parameters: {sorted(missing)}")
    return CommonParams(name=name, **{k: int(values[k]) for k in _CUSTOM_FIELDS}).validate()


def load_profile_file(path) -> CommonParams:
    """Custom profile as key=value lines; '#' starts a comment."""
    values: dict[str, int] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"bad profile line: {raw!r}")
        key, val = (part.strip() for part in line.split("=", 1))
        try:
            values[key] = int(val)
        except ValueError as exc:
            raise ParameterError(f"bad integer for {key!r}: {val!r}") from exc
    return custom_params(values)


def setup(profile) -> CommonParams:
    """Common-parameter setup: named profile, mapping, or profile file path."""
    if isinstance(profile, CommonParams):
        return profile.validate()
    if isinstance(profile, dict):
        return custom_params(profile)
    if profile in PROFILES:
        return PROFILES[profile].validate()
    p = Path(str(profile))
    if p.exists():
        return load_profile_file(p)
    raise ParameterError(f"unknown profile: {profile!r}")


def profile_id(params: CommonParams) -> int:
    return PROFILE_IDS.get(params.name, PROFILE_IDS["custom"])
