try:
    from ._hassecurves import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _hassecurves import *  # noqa: F401,F403  (in-tree build layout)
