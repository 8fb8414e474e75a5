"""Command-line front end: orientation sweeps and angular-spectrum exports
as CSV, plus a listing of the bundled presets.

Scenario sources are a flat key-value config file (``section.key = value``)
or a named preset; ``--set key=value`` overrides individual entries and the
fully resolved mapping is echoed as a comment header in every output file,
so results are self-describing and reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .antenna import AntennaPattern
from .engine import ScenarioConfig, run_realization
from .errors import MultiellError
from .pdp import BUILTIN_NLOS, resolve_pdp
from .presets import DS_BY_BAND, ANTENNAS, antenna_pattern, fig_presets
from .scattering import VonMisesParams
from .stats import SweepAxis, estimate_pas, sweep_as

ENV_SEED = "MULTIELL_SEED"

_AXIS_BY_NAME = {"tx": SweepAxis.TX_ORIENTATION, "rx": SweepAxis.RX_ORIENTATION}


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".12g")
    return str(x)


# ---------------------------------------------------------------- config ---

def _parse_config_text(text: str, source: str) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise MultiellError(f"{source}:{lineno}: expected 'key = value', got {line!r}")
        key, value = line.split("=", 1)
        mapping[key.strip()] = value.strip()
    return mapping


def _pattern_to_mapping(prefix: str, p: AntennaPattern, out: dict[str, str]) -> None:
    out[f"{prefix}.kind"] = p.kind.value
    out[f"{prefix}.gain_dbi"] = _fmt(p.gain_dbi)
    if p.hpbw_deg is not None:
        out[f"{prefix}.hpbw_deg"] = _fmt(p.hpbw_deg)
    out[f"{prefix}.boresight_deg"] = _fmt(p.boresight_deg)


def config_to_mapping(cfg: ScenarioConfig, pdp_source: str = BUILTIN_NLOS) -> dict[str, str]:
    out: dict[str, str] = {}
    out["scenario.txrx_distance_m"] = _fmt(cfg.txrx_distance_m)
    out["scenario.ds_s"] = _fmt(cfg.ds_s)
    out["scenario.frequency_label"] = cfg.frequency_label
    out["scenario.paths_per_cluster"] = str(cfg.paths_per_cluster)
    out["scenario.rice_factor_db"] = ("NLOS" if cfg.rice_factor_db is None
                                      else _fmt(cfg.rice_factor_db))
    out["scenario.seed"] = str(cfg.seed)
    out["pdp.source"] = pdp_source
    _pattern_to_mapping("tx", cfg.tx_pattern, out)
    _pattern_to_mapping("rx", cfg.rx_pattern, out)
    ls = cfg.local_scattering
    out["local_scattering.mu_deg"] = _fmt(ls.mu_deg)
    out["local_scattering.kappa"] = _fmt(ls.kappa)
    out["local_scattering.power_share"] = ("auto" if ls.power_share is None
                                           else _fmt(ls.power_share))
    return out


def _pattern_from_mapping(prefix: str, m: dict[str, str]) -> AntennaPattern:
    preset = m.get(f"{prefix}.preset")
    if preset is not None:
        if preset not in ANTENNAS:
            raise MultiellError(f"unknown antenna preset {preset!r}")
        return antenna_pattern(preset, float(m.get(f"{prefix}.boresight_deg", "0")))
    kind = m.get(f"{prefix}.kind", "omni").lower()
    gain = float(m.get(f"{prefix}.gain_dbi", "0"))
    boresight = float(m.get(f"{prefix}.boresight_deg", "0"))
    if kind == "omni":
        return AntennaPattern.omni(gain_dbi=gain)
    if kind == "gaussian":
        hpbw = m.get(f"{prefix}.hpbw_deg")
        if hpbw is None:
            raise MultiellError(f"{prefix}.kind = gaussian requires {prefix}.hpbw_deg")
        return AntennaPattern.gaussian(float(hpbw), boresight_deg=boresight, gain_dbi=gain)
    raise MultiellError(f"unknown {prefix}.kind {kind!r}")


def mapping_to_config(m: dict[str, str]) -> ScenarioConfig:
    rice_raw = m.get("scenario.rice_factor_db", "NLOS")
    rice = None if rice_raw.upper() == "NLOS" else float(rice_raw)
    share_raw = m.get("local_scattering.power_share", "auto")
    share = None if share_raw.lower() == "auto" else float(share_raw)
    band = m.get("scenario.frequency_label", "")
    ds_default = DS_BY_BAND.get(band)
    ds_raw = m.get("scenario.ds_s")
    if ds_raw is None and ds_default is None:
        raise MultiellError("scenario.ds_s is required")
    return ScenarioConfig(
        pdp=resolve_pdp(m.get("pdp.source", BUILTIN_NLOS)),
        ds_s=float(ds_raw) if ds_raw is not None else ds_default,
        tx_pattern=_pattern_from_mapping("tx", m),
        rx_pattern=_pattern_from_mapping("rx", m),
        txrx_distance_m=float(m.get("scenario.txrx_distance_m", "200")),
        paths_per_cluster=int(m.get("scenario.paths_per_cluster", "500")),
        local_scattering=VonMisesParams(
            mu_deg=float(m.get("local_scattering.mu_deg", "0")),
            kappa=float(m.get("local_scattering.kappa", "3")),
            power_share=share,
        ),
        rice_factor_db=rice,
        seed=int(m.get("scenario.seed", "0")),
        frequency_label=band,
    )


# ----------------------------------------------------------------- resolve ---

class FlagError(Exception):
    """Invalid flag combination; maps to exit status 2."""


def _resolve_mapping(args) -> dict[str, str]:
    if args.config and args.preset:
        raise FlagError("--config and --preset are mutually exclusive")
    if args.preset:
        presets = fig_presets()
        if args.preset not in presets:
            raise FlagError(f"unknown preset {args.preset!r} (see 'multiell presets')")
        sp = presets[args.preset]
        mapping = config_to_mapping(sp.config)
        mapping["sweep.axis"] = sp.axis.value
        mapping["sweep.from_deg"] = _fmt(sp.start_deg)
        mapping["sweep.to_deg"] = _fmt(sp.stop_deg)
        mapping["sweep.step_deg"] = _fmt(sp.step_deg)
        mapping["sweep.trials"] = str(sp.trials)
    elif args.config:
        path = Path(args.config)
        if not path.exists():
            raise MultiellError(f"config file not found: {path}")
        mapping = _parse_config_text(path.read_text(encoding="utf-8"), str(path))
    else:
        raise FlagError("one of --config or --preset is required")

    for item in args.set or []:
        if "=" not in item:
            raise FlagError(f"--set expects key=value, got {item!r}")
        key, value = item.split("=", 1)
        mapping[key.strip()] = value.strip()

    # Specific flags override the mapping; the header echoes the result.
    if args.seed is not None:
        mapping["scenario.seed"] = str(args.seed)
    elif "scenario.seed" not in mapping and os.environ.get(ENV_SEED):
        mapping["scenario.seed"] = os.environ[ENV_SEED]
    if getattr(args, "sweep", None):
        mapping["sweep.axis"] = args.sweep
    if getattr(args, "from_deg", None) is not None:
        mapping["sweep.from_deg"] = _fmt(args.from_deg)
    if getattr(args, "to_deg", None) is not None:
        mapping["sweep.to_deg"] = _fmt(args.to_deg)
    if getattr(args, "step_deg", None) is not None:
        mapping["sweep.step_deg"] = _fmt(args.step_deg)
    if getattr(args, "trials", None) is not None:
        mapping["sweep.trials"] = str(args.trials)
    if getattr(args, "bin_width", None) is not None:
        mapping["pas.bin_width_deg"] = _fmt(args.bin_width)
    return mapping


def _header_lines(mapping: dict[str, str]) -> list[str]:
    lines = ["# resolved-config"]
    lines += [f"# {k} = {mapping[k]}" for k in sorted(mapping)]
    return lines


def _angle_list(mapping: dict[str, str]) -> list[float]:
    try:
        start = float(mapping["sweep.from_deg"])
        stop = float(mapping["sweep.to_deg"])
        step = float(mapping["sweep.step_deg"])
    except KeyError as missing:
        raise FlagError(f"sweep range incomplete: missing {missing}") from None
    if step <= 0.0 or stop < start:
        raise FlagError(f"invalid sweep range [{start}, {stop}] step {step}")
    count = int(round((stop - start) / step)) + 1
    return [start + k * step for k in range(count)]


# ---------------------------------------------------------------- commands ---

def cmd_sweep(args) -> int:
    mapping = _resolve_mapping(args)
    axis_name = mapping.get("sweep.axis")
    if axis_name not in _AXIS_BY_NAME:
        raise FlagError("--sweep tx|rx (or sweep.axis in the config) is required")
    angles = _angle_list(mapping)
    trials = int(mapping.get("sweep.trials", "10"))
    config = mapping_to_config(mapping)
    result = sweep_as(config, _AXIS_BY_NAME[axis_name], angles, trials=trials)

    lines = ["# multiell sweep"] + _header_lines(mapping)
    lines.append("alpha_t_deg,alpha_r_deg,trial,as_deg")
    for alpha_t, alpha_r, trial, as_deg in result.rows:
        lines.append(f"{_fmt(alpha_t)},{_fmt(alpha_r)},{trial},{_fmt(as_deg)}")
    lines.append("# aggregate")
    lines.append("angle,mean_as_deg,std_as_deg")
    for angle, mean, std in result.aggregate:
        lines.append(f"{_fmt(angle)},{_fmt(mean)},{_fmt(std)}")
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return 0


def cmd_pas(args) -> int:
    mapping = _resolve_mapping(args)
    bin_width = float(mapping.get("pas.bin_width_deg", "1"))
    n_bins = 360.0 / bin_width if bin_width > 0 else -1.0
    if bin_width <= 0.0 or abs(n_bins - round(n_bins)) > 1e-9:
        raise FlagError(f"bin width {bin_width} must be positive and divide 360 evenly")
    config = mapping_to_config(mapping)
    spectrum = estimate_pas(run_realization(config), bin_width_deg=bin_width)

    lines = ["# multiell pas"] + _header_lines(mapping)
    lines.append("angle_deg,density_per_deg")
    for center, density in zip(spectrum.bin_centers_deg, spectrum.density_per_deg):
        lines.append(f"{_fmt(float(center))},{_fmt(float(density))}")
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    return 0


def cmd_presets(_args=None) -> int:
    out = ["antennas:"]
    for p in ANTENNAS.values():
        out.append(f"  {p.name}: {_fmt(p.gain_dbi)} dBi, HPBW {_fmt(p.hpbw_deg)} deg, {p.band}")
    out.append("delay spreads:")
    for band in sorted(DS_BY_BAND):
        out.append(f"  UMa {band} DS {_fmt(DS_BY_BAND[band] * 1e9)} ns")
    out.append("link:")
    out.append("  Tx-Rx distance 200 m")
    out.append("sweeps:")
    for name, sp in sorted(fig_presets().items()):
        out.append(f"  {name}: {sp.description}")
    print("\n".join(out))
    return 0


# ------------------------------------------------------------------- main ---

def _add_common(sub: argparse.ArgumentParser, with_sweep: bool) -> None:
    sub.add_argument("--config", help="path to a key=value scenario file")
    sub.add_argument("--preset", help="bundled preset name (see 'multiell presets')")
    sub.add_argument("--seed", type=int, default=None,
                     help=f"master seed (fallback: config, then ${ENV_SEED})")
    sub.add_argument("--set", action="append", metavar="KEY=VALUE",
                     help="override one resolved-config entry (repeatable)")
    sub.add_argument("--out", required=True, help="output CSV path")
    if with_sweep:
        sub.add_argument("--sweep", choices=("tx", "rx"), help="orientation axis to sweep")
        sub.add_argument("--from", dest="from_deg", type=float, help="sweep start, degrees")
        sub.add_argument("--to", dest="to_deg", type=float, help="sweep stop, degrees")
        sub.add_argument("--step", dest="step_deg", type=float, help="sweep step, degrees")
        sub.add_argument("--trials", type=int, help="realizations per sweep point")
    else:
        sub.add_argument("--bin-width", dest="bin_width", type=float,
                         help="histogram bin width in degrees (must divide 360)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiell",
        description="Monte Carlo angle-dispersion simulation on confocal-ellipse geometry")
    commands = parser.add_subparsers(dest="command", required=True)
    _add_common(commands.add_parser("sweep", help="angle spread vs antenna orientation"),
                with_sweep=True)
    _add_common(commands.add_parser("pas", help="export the power angular spectrum"),
                with_sweep=False)
    commands.add_parser("presets", help="list bundled presets")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"sweep": cmd_sweep, "pas": cmd_pas, "presets": cmd_presets}[args.command]
    try:
        return handler(args)
    except FlagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MultiellError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
