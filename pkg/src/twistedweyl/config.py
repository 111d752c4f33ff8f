"""Run configurations (JSON) and the built-in catalog."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .affine import AffineWeylGroup
from .rootdata import RootDatumError, build_root_datum
from .twist import GammaSubgroup, Twist, TwistError, build_twist, twist_from_affine_permutation


class ConfigError(ValueError):
    pass


ALLOWED_KEYS = {"name", "cartan_type", "lattice", "twist", "sigma", "gamma", "length_bound", "format",
                "max_elements"}
TWIST_KEYS = {"diagram_perm", "omega", "affine_perm"}


@dataclass
class RunConfig:
    cartan_type: str
    lattice: Any = "simply_connected"
    twist: dict | None = None
    sigma: dict | None = None
    gamma: list[list[int]] | None = None  # None means Gamma = Omega
    length_bound: int = 4
    format: str = "json"
    max_elements: int = 2_000_000
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(data) - ALLOWED_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "cartan_type" not in data:
            raise ConfigError("config needs 'cartan_type'")
        gamma = data.get("gamma")
        if gamma is not None:
            if not isinstance(gamma, dict) or set(gamma) - {"generators"}:
                raise ConfigError("'gamma' must be {\"generators\": [[...], ...]}")
            gamma = [list(g) for g in gamma.get("generators", [])]
        for key in ("twist", "sigma"):
            t = data.get(key)
            if t is not None and (not isinstance(t, dict) or set(t) - TWIST_KEYS):
                raise ConfigError(f"'{key}' accepts only {sorted(TWIST_KEYS)}")
        bound = data.get("length_bound", 4)
        if not isinstance(bound, int) or bound < 0:
            raise ConfigError("'length_bound' must be a non-negative integer")
        fmt = data.get("format", "json")
        if fmt not in ("json", "tsv", "svg"):
            raise ConfigError("'format' must be json, tsv or svg")
        lattice = data.get("lattice", "simply_connected")
        if isinstance(lattice, dict):
            if set(lattice) != {"basis"}:
                raise ConfigError("'lattice' object must be {\"basis\": [[...]]}")
            lattice = [list(row) for row in lattice["basis"]]
        return cls(data["cartan_type"], lattice, data.get("twist"), data.get("sigma"), gamma, bound, fmt,
                   int(data.get("max_elements", 2_000_000)), data.get("name", ""))

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        return cls.from_dict(data)

    # -- realized objects ------------------------------------------------------

    @property
    def group(self) -> AffineWeylGroup:
        if "group" not in self._cache:
            try:
                self._cache["group"] = AffineWeylGroup(build_root_datum(self.cartan_type, self.lattice))
            except RootDatumError as exc:
                raise ConfigError(str(exc)) from exc
        return self._cache["group"]

    def _twist(self, spec: dict | None) -> Twist:
        G = self.group
        try:
            if spec is None:
                return build_twist(G)
            if "affine_perm" in spec:
                if set(spec) != {"affine_perm"}:
                    raise ConfigError("'affine_perm' cannot be combined with other twist keys")
                return twist_from_affine_permutation(G, spec["affine_perm"])
            return build_twist(G, spec.get("diagram_perm"), spec.get("omega"))
        except TwistError as exc:
            raise ConfigError(str(exc)) from exc

    @property
    def theta(self) -> Twist:
        if "theta" not in self._cache:
            self._cache["theta"] = self._twist(self.twist)
        return self._cache["theta"]

    @property
    def sigma_twist(self) -> Twist:
        """The twist defining the fixed subgroup; defaults to theta."""
        if self.sigma is None:
            return self.theta
        if "sigma" not in self._cache:
            self._cache["sigma"] = self._twist(self.sigma)
        return self._cache["sigma"]

    @property
    def gamma_subgroup(self) -> GammaSubgroup:
        G, theta = self.group, self.theta
        try:
            if self.gamma is None:
                return GammaSubgroup.full(G, theta)
            return GammaSubgroup(G, theta, self.gamma)
        except (TwistError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc


def catalog() -> dict[str, RunConfig]:
    """The configurations exercised by the acceptance suite."""
    entries = {
        "A1-sc": {"cartan_type": "A1", "lattice": "simply_connected"},
        "A1-ad": {"cartan_type": "A1", "lattice": "adjoint"},
        "A1xA1-swap": {"cartan_type": "A1xA1", "lattice": "adjoint", "twist": {"diagram_perm": [1, 0], "omega": [0, 0]}},
        "A2-id": {"cartan_type": "A2", "lattice": "simply_connected"},
        "A2-swap": {"cartan_type": "A2", "lattice": "adjoint", "twist": {"affine_perm": [0, 2, 1]}},
        "B2-id": {"cartan_type": "B2", "lattice": "adjoint"},
        "B2-swap": {"cartan_type": "B2", "lattice": "adjoint", "twist": {"affine_perm": [2, 1, 0]}},
        "G2-id": {"cartan_type": "G2", "lattice": "simply_connected", "length_bound": 4},
    }
    out = {}
    for name, d in entries.items():
        d = dict(d, name=name)
        d.setdefault("length_bound", 6)
        out[name] = RunConfig.from_dict(d)
    return out
