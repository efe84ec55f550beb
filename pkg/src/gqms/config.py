"""Flat key-value model configs and the run configuration for the CLI.

A model file holds one ``key = value`` pair per line: scalar keys ``omega``,
``kappa_re``, ``kappa_im``, ``zeta_re``, ``zeta_im`` plus one ``kraus`` line
per noise pair carrying the four floats ``v_re v_im u_re u_im``.  Blank
lines and ``#`` comments are ignored; unknown or duplicated scalar keys are
rejected with the offending line number.
"""

from dataclasses import dataclass, field

from gqms.model import GaussianModel

SCALAR_KEYS = ("omega", "kappa_re", "kappa_im", "zeta_re", "zeta_im")

DEFAULT_S = 0.5
DEFAULT_MAX_DEGREE = 5
DEFAULT_N_MAX = 40


class ConfigError(ValueError):
    """Malformed model config; message carries file and line diagnostics."""


@dataclass
class RunConfig:
    """Parsed model plus the numeric knobs shared by the CLI subcommands."""

    model: GaussianModel
    s: float = DEFAULT_S
    max_degree: int = DEFAULT_MAX_DEGREE
    n_max: int = DEFAULT_N_MAX
    tolerances: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.s <= 1:
            raise ConfigError(f"s={self.s} outside [0, 1]")
        if self.max_degree < 0:
            raise ConfigError(f"max_degree={self.max_degree} must be non-negative")
        if not 4 <= self.n_max <= 64:
            raise ConfigError(f"n_max={self.n_max} outside [4, 64]")


def parse_model_text(text, source="<config>"):
    """Parse config text into a :class:`GaussianModel`."""
    scalars = {}
    kraus = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "kraus":
            parts = value.split()
            if len(parts) != 4:
                raise ConfigError(
                    f"{source}:{lineno}: kraus needs 4 values (v_re v_im u_re u_im), "
                    f"got {len(parts)}"
                )
            try:
                v_re, v_im, u_re, u_im = (float(p) for p in parts)
            except ValueError as exc:
                raise ConfigError(f"{source}:{lineno}: non-numeric kraus entry") from exc
            kraus.append((complex(v_re, v_im), complex(u_re, u_im)))
        elif key in SCALAR_KEYS:
            if key in scalars:
                raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
            try:
                scalars[key] = float(value)
            except ValueError as exc:
                raise ConfigError(
                    f"{source}:{lineno}: non-numeric value for {key!r}: {value!r}"
                ) from exc
        else:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
    if not kraus:
        raise ConfigError(f"{source}: at least one 'kraus = v_re v_im u_re u_im' line is required")
    return GaussianModel(
        omega=scalars.get("omega", 0.0),
        kappa=complex(scalars.get("kappa_re", 0.0), scalars.get("kappa_im", 0.0)),
        zeta=complex(scalars.get("zeta_re", 0.0), scalars.get("zeta_im", 0.0)),
        kraus=tuple(kraus),
    )


def load_model(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_model_text(text, source=str(path))


def format_model(model):
    """Render a model as config text (inverse of :func:`parse_model_text`)."""
    lines = [
        f"omega = {model.omega!r}",
        f"kappa_re = {model.kappa.real!r}",
        f"kappa_im = {model.kappa.imag!r}",
        f"zeta_re = {model.zeta.real!r}",
        f"zeta_im = {model.zeta.imag!r}",
    ]
    for v, u in model.kraus:
        lines.append(f"kraus = {v.real!r} {v.imag!r} {u.real!r} {u.imag!r}")
    return "\n".join(lines) + "\n"
