"""# gradatim.meta

Package metadata.
"""

__author__ = "Gabriel C. Trahan"
__author_email__ = "gabriel.trahan1@louisiana.edu"
__description__ = """Self-paced deep regression forests that rank samples by likelihood and predictive uncertainty, so underrepresented examples are learned early."""
__title__ = "gradatim"
__url__ = "https://github.com/theokoles7/gradatim"
__version__ = "0.1.0"
__version_info__ = tuple(int(i) for i in __version__.split("."))
