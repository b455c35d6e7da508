"""Command-line front end: ``prufer <command> [--job-file FILE] ...``.

The job is read from ``--job-file`` or standard input; the command on the
command line overrides the one in the job.  Exit codes: 0 success, 2 a
definite negative verdict, 1 any error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .jobs import COMMANDS, EXIT_ERROR, JobError, parse_job, run_job


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prufer",
                                description="Pseudo-matrix calculus over Z and quadratic orders.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--job-file", help="JSON job (default: standard input)")
    p.add_argument("--domain-file", help="JSON domain descriptor overriding the job's")
    p.add_argument("--out", help="write the result here instead of standard output")
    p.add_argument("--pretty", action="store_true", help="add a human-readable rendering")
    p.add_argument("--bezout-only", action="store_true",
                   help="always use Bezout steps, never plain divisibility pivots")
    p.add_argument("--max-dim", type=int, default=None, help="largest accepted matrix dimension")
    return p


def _emit(doc, out, pretty):
    text = json.dumps(doc, indent=2 if pretty else None, ensure_ascii=False)
    if pretty and "rendering" in doc:
        text += "\n\n" + "\n".join(doc["rendering"])
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.job_file:
            with open(args.job_file, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        domain = None
        if args.domain_file:
            with open(args.domain_file, encoding="utf-8") as fh:
                domain = json.load(fh)
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            data = None  # parse_job reports the position
        if isinstance(data, dict):
            data["command"] = args.command
            if args.bezout_only:
                data.setdefault("options", {})["bezout_only"] = True
            text = json.dumps(data)
        job = parse_job(text, domain, args.max_dim)
    except (JobError, OSError, json.JSONDecodeError) as exc:
        location = getattr(exc, "location", "")
        doc = {"command": args.command, "status": "error", "error": f"parse: {exc}"}
        if location:
            doc["location"] = location
        _emit(doc, args.out, args.pretty)
        return EXIT_ERROR
    doc, code = run_job(job, args.pretty)
    _emit(doc, args.out, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
