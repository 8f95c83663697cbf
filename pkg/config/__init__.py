from .run_config import (
    RunConfig,
    PhysicalBlock,
    DimensionlessBlock,
    ScenarioOptions,
    build_run_config,
    load_parameter_file,
    load_presets,
    load_preset,
    parse_quantity,
)

__all__ = [
    'RunConfig', 'PhysicalBlock', 'DimensionlessBlock', 'ScenarioOptions',
    'build_run_config', 'load_parameter_file', 'load_presets', 'load_preset', 'parse_quantity',
]
