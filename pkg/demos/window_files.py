"""
Window files and diagrams
=========================

Windows are stored as JSON with exact ``"num/den"`` entries, and can be
drawn with Graphviz.
"""

import tempfile
from pathlib import Path

from capelli_quiver import make_example, skew_preset, window_to_dot
from capelli_quiver.windowio import dumps_window, load_window, save_window

w = make_example(skew_preset(2), "localized")
print(dumps_window(w))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "localized.json"
    save_window(w, path)
    assert load_window(path) == w

# pipe this into `dot -Tpng` to get a picture; bold arrows are the non-forced edges
print(window_to_dot(w))
