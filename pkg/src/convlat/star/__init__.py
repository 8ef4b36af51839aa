"""Snowflake arithmetic and general star-set lattices."""

from .experiments import ascending_chain_experiment, octagon_exploration
from .extrational import INF, format_ext, parse_ext
from .snowflake import (
    S1,
    S2,
    S3,
    Snow,
    SnowflakeError,
    descending_chain,
    eval_snow_expr,
    parse_snow,
    snow,
    snow_generate,
    snow_join,
    snow_meet,
    snow_sublattice,
)
from .stars import (
    Circuit,
    StarClosureDiverged,
    StarConfig,
    StarElement,
    StarError,
    circuits,
    geometric_closure,
    hexagon_config,
    octagon_config,
    snow_to_star,
    star_closure,
    star_join,
    star_meet,
)
