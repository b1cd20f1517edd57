from src.config.cfg import config, DEFAULT_CONFIG_PATH


__all__ = [
    "config",
    "DEFAULT_CONFIG_PATH",
]
