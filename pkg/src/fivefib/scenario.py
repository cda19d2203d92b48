"""Scenario files: INI-style batches of fibration profiles and case requests.

::

    [output]
    format = md

    [config:g12]
    g = 12
    k2 = -34
    chains = 6
    e_max = 10

    [case:quintic]
    id = plane-quintic
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass, field
from typing import Optional

from .invariants import DEFAULT_E_MAX, FibrationConfig
from .pencils import CaseId


class ScenarioError(ValueError):
    pass


CONFIG_KEYS = ("g", "k2", "gb", "s", "chains", "euler", "e_max")
CASE_KEYS = ("id", "g", "n")
OUTPUT_KEYS = ("format",)
FORMATS = ("json", "md")


@dataclass(frozen=True)
class ConfigRequest:
    name: str
    config: FibrationConfig
    e_max: int = DEFAULT_E_MAX


@dataclass(frozen=True)
class CaseRequest:
    name: str
    case_id: CaseId
    g: Optional[int] = None
    n: Optional[int] = None


@dataclass(frozen=True)
class Scenario:
    configs: tuple[ConfigRequest, ...] = ()
    cases: tuple[CaseRequest, ...] = ()
    format: str = "md"

    def dumps(self) -> str:
        parser = _parser()
        parser["output"] = {"format": self.format}
        for req in self.configs:
            c = req.config
            section = {"g": str(c.g), "k2": str(c.K2), "gb": str(c.g_B), "s": str(c.s),
                       "chains": ",".join(map(str, c.chains)), "e_max": str(req.e_max)}
            if c.euler_override is not None:
                section["euler"] = str(c.euler_override)
            parser[f"config:{req.name}"] = section
        for req in self.cases:
            section = {"id": req.case_id.value}
            if req.g is not None:
                section["g"] = str(req.g)
            if req.n is not None:
                section["n"] = str(req.n)
            parser[f"case:{req.name}"] = section
        buf = io.StringIO()
        parser.write(buf)
        return buf.getvalue()


def _parser() -> configparser.ConfigParser:
    parser = configparser.ConfigParser(interpolation=None, default_section="__none__")
    parser.optionxform = str
    return parser


def _int(section: str, key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ScenarioError(f"[{section}] {key} must be an integer, got {raw!r}") from None


def _check_keys(section: str, keys, allowed) -> None:
    unknown = sorted(set(keys) - set(allowed))
    if unknown:
        raise ScenarioError(f"[{section}] unknown keys: {', '.join(unknown)}")


def loads(text: str) -> Scenario:
    parser = _parser()
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ScenarioError(str(exc)) from None
    configs, cases, fmt = [], [], "md"
    for section in parser.sections():
        body = parser[section]
        kind, _, name = section.partition(":")
        if section == "output":
            _check_keys(section, body, OUTPUT_KEYS)
            fmt = body.get("format", "md")
            if fmt not in FORMATS:
                raise ScenarioError(f"[output] format must be one of {FORMATS}, got {fmt!r}")
        elif kind == "config" and name:
            _check_keys(section, body, CONFIG_KEYS)
            for key in ("g", "k2"):
                if key not in body:
                    raise ScenarioError(f"[{section}] missing {key}")
            chains = tuple(_int(section, "chains", x) for x in body.get("chains", "").split(",") if x.strip())
            config = FibrationConfig(
                g=_int(section, "g", body["g"]),
                K2=_int(section, "k2", body["k2"]),
                g_B=_int(section, "gb", body.get("gb", "0")),
                s=_int(section, "s", body.get("s", "5")),
                chains=chains,
                euler_override=_int(section, "euler", body["euler"]) if "euler" in body else None,
            )
            configs.append(ConfigRequest(name, config, _int(section, "e_max", body.get("e_max", str(DEFAULT_E_MAX)))))
        elif kind == "case" and name:
            _check_keys(section, body, CASE_KEYS)
            if "id" not in body:
                raise ScenarioError(f"[{section}] missing id")
            cases.append(CaseRequest(
                name,
                CaseId.parse(body["id"]),
                _int(section, "g", body["g"]) if "g" in body else None,
                _int(section, "n", body["n"]) if "n" in body else None,
            ))
        else:
            raise ScenarioError(f"unknown section [{section}]")
    return Scenario(tuple(configs), tuple(cases), fmt)


def load(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
