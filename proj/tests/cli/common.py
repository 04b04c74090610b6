import json
import subprocess
import sys
import tempfile
from pathlib import Path

failures = []


def run(binary, *args, cwd=None):
    proc = subprocess.run([binary, *args], capture_output=True, text=True,
                          cwd=cwd, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def expect(cond, label):
    print(("ok    " if cond else "FAIL  ") + label)
    if not cond:
        failures.append(label)


def finish():
    if failures:
        print(f"{len(failures)} failure(s)")
        sys.exit(1)
    print("all passed")


def scratch():
    return Path(tempfile.mkdtemp(prefix="vvilab-cli-"))


def load(text):
    return json.loads(text)
