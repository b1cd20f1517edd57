from mmengine.registry import Registry

SPACE = Registry('space', locations=['src.cli.builtin'])
PROFILE = Registry('profile', locations=['src.norms.profiles'])
ALGEBRA = Registry('algebra', locations=['src.liealg.builtin'])
