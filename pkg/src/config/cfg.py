import os
from argparse import Namespace

from mmengine import Config as MMConfig
from dotenv import load_dotenv
load_dotenv(verbose=False)

from src.utils import assemble_project_path, resolve_threads, Singleton
from src.logger import logger

DEFAULT_CONFIG_PATH = "configs/default_config.py"


def process_general(config: MMConfig) -> MMConfig:

    workdir = os.getenv("FINSLER_WORKDIR", config.workdir)
    config.exp_path = assemble_project_path(os.path.join(workdir, config.tag))
    os.makedirs(config.exp_path, exist_ok=True)

    config.log_path = os.path.join(config.exp_path, getattr(config, 'log_path', 'finsler.log'))

    return config


def process_threads(config: MMConfig) -> MMConfig:
    # --threads beats FINSLER_THREADS beats the config file
    config.threads = resolve_threads(config.get('threads', None))
    return config


class Config(MMConfig, metaclass=Singleton):
    def __init__(self):
        super(Config, self).__init__()

    def init_config(self, config_path: str = DEFAULT_CONFIG_PATH, args: Namespace | None = None) -> None:
        mmconfig = MMConfig.fromfile(filename=assemble_project_path(config_path))
        args = args if args is not None else Namespace()
        if 'cfg_options' not in args or args.cfg_options is None:
            cfg_options = dict()
        else:
            cfg_options = dict(args.cfg_options)
        for item in args.__dict__:
            if item in mmconfig and item not in ['config', 'cfg_options'] and args.__dict__[item] is not None:
                cfg_options[item] = args.__dict__[item]
        mmconfig.merge_from_dict(cfg_options)

        mmconfig = process_general(mmconfig)
        mmconfig = process_threads(mmconfig)

        self.__dict__.update(mmconfig.__dict__)
        logger.debug(f"| Run config loaded from {config_path}, log file: {mmconfig.log_path}")


config = Config()
