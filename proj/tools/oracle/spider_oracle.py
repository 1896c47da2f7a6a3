#!/usr/bin/env python3
"""Reference verdicts from the benchmark's official evaluation scripts.

Given a schema file and a list of {"db_id", "pred", "gold"} pairs, prints a
JSON list of {"set_match", "hardness"} computed by the official
evaluation.py / process_sql.py, found in --eval-dir. Schemas come from the
schema file (lowercased), so no database files are needed.

The official scripts import a few optional modules at top level; stubs are
installed for those that only matter for execution accuracy.
"""

import argparse
import copy
import json
import sys
import types


def install_stubs():
    for name in ("exec_eval", "func_timeout"):
        if name in sys.modules:
            continue
        mod = types.ModuleType(name)
        mod.eval_exec_match = lambda **kw: None
        mod.func_timeout = lambda *a, **kw: None
        mod.FunctionTimedOut = Exception
        sys.modules[name] = mod


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--eval-dir", required=True)
    ap.add_argument("--tables", required=True)
    ap.add_argument("--pairs", required=True)
    args = ap.parse_args()

    install_stubs()
    sys.path.insert(0, args.eval_dir)
    import process_sql
    from nltk.tokenize import NLTKWordTokenizer

    # punkt data is not needed for single-sentence SQL strings.
    process_sql.word_tokenize = NLTKWordTokenizer().tokenize
    import evaluation

    with open(args.tables) as f:
        tables = json.load(f)
    schemas, kmaps = {}, {}
    for entry in tables:
        cols = {}
        for t in entry["table_names_original"]:
            cols[t.lower()] = []
        for ti, name in entry["column_names_original"]:
            if ti >= 0:
                cols[entry["table_names_original"][ti].lower()].append(name.lower())
        schemas[entry["db_id"]] = process_sql.Schema(cols)
        kmaps[entry["db_id"]] = evaluation.build_foreign_key_map(entry)

    with open(args.pairs) as f:
        pairs = json.load(f)

    out = []
    evaluator = evaluation.Evaluator()
    for p in pairs:
        schema = schemas[p["db_id"]]
        kmap = kmaps[p["db_id"]]
        rec = {}
        try:
            g_sql = process_sql.get_sql(schema, p["gold"])
        except Exception as e:  # noqa: BLE001
            out.append({"error": "gold: %r" % (e,)})
            continue
        rec["hardness"] = evaluator.eval_hardness(copy.deepcopy(g_sql))
        try:
            p_sql = process_sql.get_sql(schema, p["pred"])
            rec["pred_parsed"] = True
        except Exception:  # noqa: BLE001
            rec["pred_parsed"] = False
            p_sql = {
                "except": None,
                "from": {"conds": [], "table_units": []},
                "groupBy": [],
                "having": [],
                "intersect": None,
                "limit": None,
                "orderBy": [],
                "select": [False, []],
                "union": None,
                "where": [],
            }
        g_valid = evaluation.build_valid_col_units(g_sql["from"]["table_units"], schema)
        g_sql = evaluation.rebuild_sql_val(g_sql)
        g_sql = evaluation.rebuild_sql_col(g_valid, g_sql, kmap)
        p_valid = evaluation.build_valid_col_units(p_sql["from"]["table_units"], schema)
        p_sql = evaluation.rebuild_sql_val(p_sql)
        p_sql = evaluation.rebuild_sql_col(p_valid, p_sql, kmap)
        try:
            rec["set_match"] = bool(evaluator.eval_exact_match(p_sql, g_sql))
        except TypeError as e:
            # Sorting FROM units that are both subqueries compares dicts.
            rec["error"] = "compare: %r" % (e,)
        out.append(rec)
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
