from dataclasses import dataclass
from typing import List, Optional
import os
from omegaconf import OmegaConf


@dataclass
class LensConfig:
	# Output
	precision: int = 15
	json: bool = False
	show_progress: bool = True
	# Default ranges
	pmax: int = 60
	rmax: int = 45
	verify_rmax: int = 199
	tau_order: int = 12
	# Search fan-out (1 = serial, 0 = one per CPU)
	workers: int = 1
	# W&B
	use_wandb: bool = False
	wandb_project: str = "lens-invariants"


DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'configs', 'lens.yaml')


def load_config(config_cls, config_path: Optional[str] = None, overrides: Optional[List[str]] = None):
	"""Dataclass defaults, then the YAML file, then dotlist overrides like key=value."""
	# Build a structured schema from the dataclass TYPE so YAML keys are type-checked.
	cfg = OmegaConf.structured(config_cls)

	if config_path is not None:
		if not os.path.isfile(config_path):
			raise FileNotFoundError(f"Config file not found: {config_path} (cwd: {os.getcwd()})")
		file_cfg = OmegaConf.load(config_path)
		cfg = OmegaConf.merge(cfg, file_cfg)

	# Merge dotlist overrides if any (ignore leading '--')
	dot_overrides = [s.lstrip('-') for s in (overrides or []) if '=' in s]
	if dot_overrides:
		cli_cfg = OmegaConf.from_dotlist(dot_overrides)
		cfg = OmegaConf.merge(cfg, cli_cfg)

	# Return a typed dataclass instance
	return OmegaConf.to_object(cfg)
