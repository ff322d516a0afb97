# -*- coding: utf-8 -*-

__author__ = "qqfdr developers"
__email__ = "qqfdr@users.noreply.github.com"
__version__ = "1.0.0"
__all__ = ['__author__', '__email__', '__version__']
