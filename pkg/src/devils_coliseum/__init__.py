"""Devil's Coliseum - escape probabilities of random polynomial dynamics."""

from devils_coliseum.config import RunConfig, build_generator_system, load_config
from devils_coliseum.field.render import render_T
from devils_coliseum.semigroup.system import build_system, coliseum_system

__all__ = ["RunConfig", "build_generator_system", "build_system", "coliseum_system", "load_config", "render_T"]
