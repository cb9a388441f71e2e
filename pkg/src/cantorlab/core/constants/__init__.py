from .stdout_colors import StdOutColors
