"""# gradatim.banner

Versioning banner.
"""

__all__ = ["BANNER"]

from gradatim.__meta__  import __version__

BANNER: str =   f"""
+===============================================================+
|  ██████╗ ██████╗  █████╗ ██████╗  █████╗ ████████╗██╗███╗   ███╗ |
| ██╔════╝ ██╔══██╗██╔══██╗██╔══██╗██╔══██╗╚══██╔══╝██║████╗ ████║ |
| ██║  ███╗██████╔╝███████║██║  ██║███████║   ██║   ██║██╔████╔██║ |
| ██║   ██║██╔══██╗██╔══██║██║  ██║██╔══██║   ██║   ██║██║╚██╔╝██║ |
| ╚██████╔╝██║  ██║██║  ██║██████╔╝██║  ██║   ██║   ██║██║ ╚═╝ ██║ |
|  ╚═════╝ ╚═╝  ╚═╝╚═╝  ╚═╝╚═════╝ ╚═╝  ╚═╝   ╚═╝   ╚═╝╚═╝     ╚═╝ |
+_______________________________________________________________+
| Copyright (C) 2026 Gabriel C. Trahan                 {f"v{__version__}":>12} |
+===============================================================+"""
