# -*- coding: utf-8 -*-
# @Author: wqshen
# @Date: 2024/3/2 10:15
# @Last Modified by: wqshen

import os
import yaml
from logzero import logger


def load_settings(pathfile: str = 'config/settings.yml') -> dict:
    """load frozen conventions and default budgets

    Parameters
    ----------
    pathfile: str
        path to yaml settings, resolved against the package directory if not found

    Returns
    -------
    settings: dict
    """
    if not os.path.isfile(pathfile):
        path = os.path.dirname(os.path.realpath(__file__))
        pathfile = os.path.join(path, pathfile)
        if not os.path.isfile(pathfile):
            raise FileNotFoundError(f"configuration file {pathfile} not found")

    with open(pathfile, 'r', encoding='utf8') as f:
        settings = yaml.load(f, Loader=yaml.SafeLoader)
    logger.debug("settings loaded from {}".format(pathfile))
    return settings


SETTINGS = load_settings()
