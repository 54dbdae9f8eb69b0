# coding: utf-8

# # Driving the command line
#
# The same analyses are available as the ``leebounds`` command.  This script
# writes a code file and calls the entry point directly.

import json
import tempfile
from pathlib import Path

from leebounds.cli import main

path = Path(tempfile.mkdtemp()) / "code.json"
path.write_text(json.dumps({"p": 3, "s": 2, "generators": [[3, 0, 0, 3], [0, 3, 0, 6],
                                                           [0, 0, 3, 6]]}))

main(["analyze", str(path)])
main(["bounds", str(path), "--format", "csv"])
main(["table", "--params", "6,3,9,1"])
main(["density", "ell-zero", "--p", "3", "--K", "3", "--n", "6", "--trials", "20000",
      "--seed", "7", "--census", "--s", "1"])
