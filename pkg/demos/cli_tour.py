"""
The command line
================

Run the ``cosetforge`` command on a few inputs from inside Python.  The same
invocations work from a shell.
"""

import pathlib
import tempfile

from cosetforge.cli import main

main(["builtins"])

print("\n$ cosetforge analyze --builtin cube --format markdown")
main(["analyze", "--builtin", "cube", "--format", "markdown"])

geo = """# hemidodecahedron
degree 5
G:  (2,3)(4,5) (1,2)(3,4) (2,5)(3,4)
G0: (1,2)(3,4) (2,5)(3,4)
G1: (2,3)(4,5) (2,5)(3,4)
"""
with tempfile.TemporaryDirectory() as tmp:
    path = pathlib.Path(tmp) / "hemi.geo"
    path.write_text(geo)
    print("\n$ cosetforge levi hemi.geo")
    main(["levi", str(path)])
    print("\n$ cosetforge check --geometry hemi.geo")
    main(["check", "--geometry", str(path)])
