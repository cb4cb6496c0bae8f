# Copyright 2022 CodeNotary, Inc. All rights reserved.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#       http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import csv
import io
import json
from typing import Dict, List, Optional, Sequence, Tuple

from kasami import constants
from kasami.code.forms import CodeParams, make_params
from kasami.code.spectrum import weight_distribution
from kasami.datatypes import DcSpectrum, RankSpectrum, RunConfig
from kasami.exceptions import ErrIllegalArguments

SPECTRUM_CSV_COLUMNS = ["method", "m", "n", "d", "e", "k", "kind", "dc", "weight", "rank", "count"]


def params_from_config(cfg: RunConfig, default_k: Optional[int] = None) -> CodeParams:
    """CodeParams from the --m --n --d --k flags; e is derived, never given."""
    if cfg.k is None and default_k is not None:
        m, n, d = required(cfg, "m", "n", "d")
        return make_params(m, n, d, default_k)
    m, n, d, k = required(cfg, "m", "n", "d", "k")
    return make_params(m, n, d, k)


def required(cfg: RunConfig, *names: str) -> List[int]:
    values = [getattr(cfg, name) for name in names]
    missing = ["--" + name for name, value in zip(names, values) if value is None]
    if missing:
        raise ErrIllegalArguments("{} requires {}".format(cfg.subcommand, " ".join(missing)))
    return values


def params_to_dict(p: CodeParams) -> Dict[str, int]:
    return {"m": p.m, "n": p.n, "d": p.d, "e": p.e, "k": p.k}


def spectrum_to_dict(p: CodeParams, spectrum: DcSpectrum, beta: Optional[RankSpectrum], method: str) -> Dict:
    """Converts a spectrum to its JSON-ready form

    Args:
        p (CodeParams): code parameters
        spectrum (DcSpectrum): DC census of the nonzero codewords
        beta (RankSpectrum, optional): rank census
        method (str): "formula" or "enumerate"

    Returns:
        dict: counts are decimal strings; weights include the zero codeword
    """
    length = (1 << p.m) - 1
    entries = []
    for (r, eps), count in spectrum.alpha.items():
        dc = spectrum.dc_value(r, eps)
        entries.append({"dc": dc, "weight": (length - dc) // 2, "count": str(count)})
    entries.append({"dc": -1, "weight": (length + 1) // 2, "count": str(spectrum.balanced)})
    entries.sort(key=lambda entry: -entry["dc"])
    ranks = []
    if beta is not None:
        ranks = [{"rank": r, "count": str(c)} for r, c in sorted(beta.beta.items(), reverse=True)]
    weights = [{"weight": w, "count": str(c)} for w, c in weight_distribution(p, spectrum).items()]
    return {"params": params_to_dict(p), "spectrum": entries, "beta": ranks, "weights": weights, "method": method}


def _alpha_key(m: int, e: int, dc: int) -> Tuple[int, int]:
    s = dc + 1
    eps = 1 if s > 0 else -1
    magnitude = abs(s)
    if magnitude & (magnitude - 1):
        raise ErrIllegalArguments("DC value {} is not -1 +- a power of two".format(dc))
    t = magnitude.bit_length() - 1
    r, rem = divmod(2 * (m - t), e)
    if rem:
        raise ErrIllegalArguments("DC value {} does not match e={}".format(dc, e))
    return r, eps


def spectrum_from_dict(record: Dict) -> Tuple[Dict[str, int], DcSpectrum, RankSpectrum, str]:
    params = record["params"]
    m, e = params["m"], params["e"]
    alpha = {}
    balanced = 0
    for entry in record["spectrum"]:
        if entry["dc"] == -1:
            balanced = int(entry["count"])
        else:
            alpha[_alpha_key(m, e, entry["dc"])] = int(entry["count"])
    beta = RankSpectrum(beta={entry["rank"]: int(entry["count"]) for entry in record["beta"]})
    return dict(params), DcSpectrum(m=m, e=e, alpha=alpha, balanced=balanced), beta, record["method"]


def parse_spectrum_json(text: str):
    return spectrum_from_dict(json.loads(text))


def _spectrum_rows(record: Dict) -> List[List]:
    params = record["params"]
    head = [record["method"]] + [params[key] for key in ("m", "n", "d", "e", "k")]
    rows = []
    for entry in record["spectrum"]:
        rows.append(head + ["spectrum", entry["dc"], entry["weight"], "", entry["count"]])
    for entry in record["beta"]:
        rows.append(head + ["beta", "", "", entry["rank"], entry["count"]])
    for entry in record.get("weights", []):
        rows.append(head + ["weight", "", entry["weight"], "", entry["count"]])
    return rows


def emit_spectrum(record: Dict, fmt: str) -> str:
    if fmt == constants.FORMAT_JSON:
        return json.dumps(record, indent=2) + "\n"
    if fmt == constants.FORMAT_CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SPECTRUM_CSV_COLUMNS)
        writer.writerows(_spectrum_rows(record))
        return buf.getvalue()
    if fmt == constants.FORMAT_TEXT:
        params = record["params"]
        title = "method={} m={} n={} d={} e={} k={}\n".format(
            record["method"], params["m"], params["n"], params["d"], params["e"], params["k"])
        out = title + format_table(["dc", "weight", "count"],
                                   [[x["dc"], x["weight"], x["count"]] for x in record["spectrum"]])
        if record["beta"]:
            out += "\n" + format_table(["rank", "beta"], [[x["rank"], x["count"]] for x in record["beta"]])
        if record.get("weights"):
            out += "\n" + format_table(["weight", "codewords"], [[x["weight"], x["count"]] for x in record["weights"]])
        return out
    raise ErrIllegalArguments("unknown format {}".format(fmt))


def format_table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for n, row in enumerate(cells):
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def emit_records(headers: Sequence[str], records: Sequence[Dict], fmt: str) -> str:
    """Flat records for the solutions, identities and verify reports."""
    if fmt == constants.FORMAT_JSON:
        return json.dumps(list(records), indent=2) + "\n"
    if fmt == constants.FORMAT_CSV:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(headers), lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buf.getvalue()
    if fmt == constants.FORMAT_TEXT:
        return format_table(headers, [[r.get(h, "") for h in headers] for r in records])
    raise ErrIllegalArguments("unknown format {}".format(fmt))
