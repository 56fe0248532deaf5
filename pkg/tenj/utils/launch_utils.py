"""YAML configuration loading with ``_target_`` instantiation."""

import importlib
from pathlib import Path
from typing import Any, Dict, Union

from omegaconf import OmegaConf

from tenj.errors import ParseError


def load_config(path: Union[str, Path]) -> Dict[str, Any]:
    """Load and resolve a YAML configuration."""
    try:
        cfg = OmegaConf.to_container(OmegaConf.load(str(path)), resolve=True)
    except Exception as e:
        raise ParseError(f"cannot read YAML configuration: {e}", str(path)) from None
    if not isinstance(cfg, dict):
        raise ParseError("top level of a configuration must be a mapping", str(path))
    return cfg


def instantiate_from_dict(cfg):
    """Instantiate objects from configuration."""
    if isinstance(cfg, dict) and "_target_" in cfg:
        module_path, name = cfg["_target_"].rsplit(".", 1)
        try:
            target = getattr(importlib.import_module(module_path), name)
        except (ImportError, AttributeError):
            raise ParseError(f"unknown _target_ {cfg['_target_']!r}") from None
        kwargs = {k: v for k, v in cfg.items() if k != "_target_"}
        return target(**{k: instantiate_from_dict(v) for k, v in kwargs.items()})
    elif isinstance(cfg, dict):
        return {k: instantiate_from_dict(v) for k, v in cfg.items()}
    elif isinstance(cfg, list):
        return [instantiate_from_dict(v) for v in cfg]
    else:
        return cfg
