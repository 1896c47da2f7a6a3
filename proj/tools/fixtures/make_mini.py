#!/usr/bin/env python3
"""Regenerates tests/fixtures/mini from the schemas and examples in this dir.

    python3 tools/fixtures/make_mini.py --out tests/fixtures/mini \
        [--oracle-eval-dir DIR]

With --oracle-eval-dir, the official evaluation scripts found there are run
through tools/oracle/spider_oracle.py and their verdicts are frozen into
eval_pairs.json and roundtrip.json. Without it, previously frozen verdicts are
carried over from the existing files.
"""

import argparse
import json
import os
import random
import subprocess
import sys
import tempfile

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, HERE)

from mini_examples import DEV, SPARC_DEV, SPARC_TRAIN, TRAIN  # noqa: E402
from mini_schemas import DATABASES, tables_json  # noqa: E402

ROUNDTRIP_SIZE = 240
SEED = 20240611


# ---------------------------------------------------------------- queries


class Db:
    def __init__(self, spec):
        self.db_id, tables, _, fks = spec
        self.tables = {t: cols for t, cols in tables}
        self.names = [t for t, _ in tables]
        self.fks = [tuple(x.split(".") for x in fk) for fk in fks]

    def numeric(self, t):
        return [c for c, ty in self.tables[t] if ty == "number"]

    def text(self, t):
        return [c for c, ty in self.tables[t] if ty == "text"]

    def cols(self, t):
        return [c for c, _ in self.tables[t]]


def literal_for(rng, db, t, c):
    ty = dict(db.tables[t])[c]
    if ty == "number":
        return str(rng.choice([1, 2, 3, 5, 10, 20, 40, 100, 2014, 3000]))
    word = rng.choice(["France", "Europe", "English", "Ford", "BK", "Virginia",
                       "Republic", "T", "PP", "fiat"])
    return "'%s'" % word


class Scope:
    """FROM sources of one query: [(table, alias or None)]."""

    def __init__(self, rng, db, allow_join):
        self.rng, self.db = rng, db
        if allow_join and db.fks and rng.random() < 0.45:
            self.sources, self.on = self._join(rng.choice([2, 2, 3]))
        else:
            self.sources, self.on = [(rng.choice(db.names), None)], []

    def _join(self, n):
        (a_t, a_c), (b_t, b_c) = self.rng.choice(self.db.fks)
        sources = [(a_t, "T1"), (b_t, "T2")]
        on = ["T1.%s = T2.%s" % (a_c, b_c)]
        if n == 3:
            used = {a_t, b_t}
            extra = [fk for fk in self.db.fks
                     if (fk[0][0] in used) != (fk[1][0] in used)]
            if extra:
                (x_t, x_c), (y_t, y_c) = self.rng.choice(extra)
                new_t, new_c, old_t, old_c = (
                    (x_t, x_c, y_t, y_c) if x_t not in used else (y_t, y_c, x_t, x_c))
                old_alias = [al for tt, al in sources if tt == old_t][0]
                sources.append((new_t, "T3"))
                on.append("%s.%s = T3.%s" % (old_alias, old_c, new_c))
        return sources, on

    def pick(self, want=None):
        t, alias = self.rng.choice(self.sources)
        pool = {"num": self.db.numeric(t), "text": self.db.text(t)}.get(want) or self.db.cols(t)
        c = self.rng.choice(pool)
        return t, c, ("%s.%s" % (alias, c) if alias else c)

    def from_sql(self):
        t0, a0 = self.sources[0]
        parts = [t0 + (" AS " + a0 if a0 else "")]
        for (t, a), cond in zip(self.sources[1:], self.on):
            parts.append("JOIN %s AS %s ON %s" % (t, a, cond))
        return " ".join(parts)


def select_items(rng, scope, grouped_col):
    items = []
    if grouped_col:
        items.append(grouped_col)
    for _ in range(rng.choice([1, 1, 2, 3]) - (1 if grouped_col else 0)):
        roll = rng.random()
        if roll < 0.15:
            items.append("count(*)")
        elif roll < 0.4:
            _, _, ref = scope.pick("num")
            items.append("%s(%s)" % (rng.choice(["avg", "sum", "min", "max"]), ref))
        elif roll < 0.47:
            _, _, ref = scope.pick()
            items.append("count(DISTINCT %s)" % ref)
        elif roll < 0.52:
            _, _, r1 = scope.pick("num")
            _, _, r2 = scope.pick("num")
            items.append("%s %s %s" % (r1, rng.choice(["+", "-", "*", "/"]), r2))
        else:
            items.append(scope.pick()[2])
    if not items:
        items.append(scope.pick()[2])
    return items


def condition(rng, db, scope, depth):
    t, c, ref = scope.pick()
    roll = rng.random()
    if depth < 1 and roll < 0.12:
        inner = rng.choice(db.names)
        shared = [x for x in db.cols(inner) if x.lower() == c.lower()]
        col = shared[0] if shared else rng.choice(db.cols(inner))
        neg = "NOT " if rng.random() < 0.5 else ""
        return "%s %sIN (SELECT %s FROM %s)" % (ref, neg, col, inner)
    if depth < 1 and roll < 0.22:
        t2, c2, ref2 = scope.pick("num")
        return "%s %s (SELECT %s(%s) FROM %s)" % (
            ref2, rng.choice([">", "<"]), rng.choice(["avg", "max", "min"]), c2, t2)
    if roll < 0.32:
        word = rng.choice(["a", "on", "re", "Ma"])
        neg = "NOT " if rng.random() < 0.3 else ""
        return "%s %sLIKE '%%%s%%'" % (ref, neg, word)
    if roll < 0.4:
        _, _, nref = scope.pick("num")
        return "%s BETWEEN %d AND %d" % (nref, rng.choice([1, 5, 10]), rng.choice([20, 50, 100]))
    if roll < 0.43:
        return "%s IS NOT NULL" % ref if rng.random() < 0.5 else "%s IS NULL" % ref
    op = rng.choice(["=", "=", "!=", ">", "<", ">=", "<="])
    return "%s %s %s" % (ref, op, literal_for(rng, db, t, c))


def where_clause(rng, db, scope, depth):
    conds = [condition(rng, db, scope, depth) for _ in range(rng.choice([1, 1, 2, 2, 3]))]
    out = conds[0]
    for c in conds[1:]:
        out += " %s %s" % (rng.choice(["AND", "AND", "OR"]), c)
    return out


def core_query(rng, db, depth=0, plain=False):
    scope = Scope(rng, db, allow_join=not plain)
    grouped = rng.random() < (0.0 if plain else 0.3)
    group_ref = scope.pick()[2] if grouped else None
    items = select_items(rng, scope, group_ref)
    distinct = "DISTINCT " if rng.random() < 0.1 else ""
    sql = "SELECT %s%s FROM %s" % (distinct, " , ".join(items), scope.from_sql())
    if rng.random() < 0.55:
        sql += " WHERE " + where_clause(rng, db, scope, depth)
    if grouped:
        sql += " GROUP BY " + group_ref
        if rng.random() < 0.5:
            if rng.random() < 0.6:
                sql += " HAVING count(*) %s %d" % (rng.choice([">", ">=", "<", "="]), rng.choice([1, 2, 3]))
            else:
                _, _, nref = scope.pick("num")
                sql += " HAVING %s(%s) > %d" % (rng.choice(["avg", "sum", "max"]), nref, rng.choice([10, 100]))
    if not plain and rng.random() < 0.35:
        keys = []
        for _ in range(rng.choice([1, 1, 1, 2])):
            if grouped and rng.random() < 0.5:
                key = "count(*)"
            else:
                key = scope.pick()[2]
            keys.append(key)
        sql += " ORDER BY " + " , ".join(keys)
        sql += rng.choice(["", " ASC", " DESC", " DESC"])
        if rng.random() < 0.6:
            sql += " LIMIT %d" % rng.choice([1, 1, 3, 5, 10])
    return sql


def gen_query(rng, db):
    roll = rng.random()
    if roll < 0.16:
        # Set operator over two single-column queries of one table.
        t = rng.choice(db.names)
        c = rng.choice(db.cols(t))
        left = "SELECT %s FROM %s WHERE %s" % (c, t, condition(rng, db, Scope.single(rng, db, t), 1))
        right = "SELECT %s FROM %s" % (c, t)
        if rng.random() < 0.6:
            right += " WHERE " + condition(rng, db, Scope.single(rng, db, t), 1)
        op = rng.choice(["INTERSECT", "UNION", "EXCEPT"])
        return "%s %s %s" % (left, op, right)
    if roll < 0.2:
        return "SELECT count(*) FROM (%s)" % core_query(rng, db, depth=1, plain=True)
    return core_query(rng, db)


def _single(rng, db, t):
    s = Scope.__new__(Scope)
    s.rng, s.db, s.sources, s.on = rng, db, [(t, None)], []
    return s


Scope.single = staticmethod(_single)


def roundtrip_corpus():
    rng = random.Random(SEED)
    dbs = [Db(spec) for spec in DATABASES]
    out, seen = [], set()
    while len(out) < ROUNDTRIP_SIZE:
        db = dbs[len(out) % len(dbs)]
        q = gen_query(rng, db)
        if q in seen:
            continue
        seen.add(q)
        out.append({"db_id": db.db_id,
                    "question": "Generated query %d over %s." % (len(out), db.db_id),
                    "query": q})
    return out


# ------------------------------------------------------------ eval pairs

# (category, db, gold, pred). Categories name the perturbation.
EVAL_PAIRS = [
    ("identical", "concert_singer", "SELECT count(*) FROM singer", "SELECT count(*) FROM singer"),
    ("column_reorder", "concert_singer",
     "SELECT name , country , age FROM singer ORDER BY age DESC",
     "SELECT country , name , age FROM singer ORDER BY age DESC"),
    ("column_reorder", "world_1",
     "SELECT avg(GNP) , sum(population) FROM country WHERE GovernmentForm = 'US Territory'",
     "SELECT sum(population) , avg(GNP) FROM country WHERE GovernmentForm = 'US Territory'"),
    ("column_reorder", "car_1",
     "SELECT max(Accelerate) , Cylinders FROM CARS_DATA GROUP BY Cylinders",
     "SELECT Cylinders , max(Accelerate) FROM CARS_DATA GROUP BY Cylinders"),
    ("column_reorder", "dog_kennels",
     "SELECT T1.first_name , T2.name FROM Owners AS T1 JOIN Dogs AS T2 ON T1.owner_id = T2.owner_id WHERE T1.state = 'Virginia'",
     "SELECT T2.name , T1.first_name FROM Owners AS T1 JOIN Dogs AS T2 ON T1.owner_id = T2.owner_id WHERE T1.state = 'Virginia'"),
    ("alias_swap", "concert_singer",
     "SELECT T2.name , count(*) FROM concert AS T1 JOIN stadium AS T2 ON T1.stadium_id = T2.stadium_id GROUP BY T1.stadium_id",
     "SELECT T1.name , count(*) FROM stadium AS T1 JOIN concert AS T2 ON T2.stadium_id = T1.stadium_id GROUP BY T2.stadium_id"),
    ("alias_swap", "world_1",
     "SELECT DISTINCT T1.Region FROM country AS T1 JOIN countrylanguage AS T2 ON T1.Code = T2.CountryCode WHERE T2.Language = 'English' OR T2.Language = 'Dutch'",
     "SELECT DISTINCT T2.Region FROM country AS T2 JOIN countrylanguage AS T1 ON T2.Code = T1.CountryCode WHERE T1.Language = 'English' OR T1.Language = 'Dutch'"),
    ("alias_swap", "car_1",
     "SELECT T1.Model FROM CAR_NAMES AS T1 JOIN CARS_DATA AS T2 ON T1.MakeId = T2.Id ORDER BY T2.horsepower ASC LIMIT 1",
     "SELECT T2.Model FROM CARS_DATA AS T1 JOIN CAR_NAMES AS T2 ON T2.MakeId = T1.Id ORDER BY T1.horsepower ASC LIMIT 1"),
    ("alias_swap", "dog_kennels",
     "SELECT T1.breed_name FROM Breeds AS T1 JOIN Dogs AS T2 ON T1.breed_code = T2.breed_code GROUP BY T1.breed_name ORDER BY count(*) DESC LIMIT 1",
     "SELECT T2.breed_name FROM Dogs AS T1 JOIN Breeds AS T2 ON T2.breed_code = T1.breed_code GROUP BY T2.breed_name ORDER BY count(*) DESC LIMIT 1"),
    ("alias_swap", "cre_Doc_Template_Mgt",
     "SELECT T2.document_name FROM Templates AS T1 JOIN Documents AS T2 ON T1.template_id = T2.template_id WHERE T1.template_type_code = 'BK'",
     "SELECT T1.document_name FROM Documents AS T1 JOIN Templates AS T2 ON T1.template_id = T2.template_id WHERE T2.template_type_code = 'BK'"),
    ("value_change", "concert_singer",
     "SELECT avg(age) , min(age) , max(age) FROM singer WHERE country = 'France'",
     "SELECT avg(age) , min(age) , max(age) FROM singer WHERE country = 'Germany'"),
    ("value_change", "world_1",
     "SELECT Name FROM country ORDER BY Population DESC LIMIT 3",
     "SELECT Name FROM country ORDER BY Population DESC LIMIT 5"),
    ("value_change", "car_1",
     "SELECT count(*) FROM CARS_DATA WHERE Cylinders > 4",
     "SELECT count(*) FROM CARS_DATA WHERE Cylinders > 6"),
    ("value_change", "concert_singer",
     "SELECT location , name FROM stadium WHERE capacity BETWEEN 5000 AND 10000",
     "SELECT location , name FROM stadium WHERE capacity BETWEEN 1000 AND 2000"),
    ("value_change", "cre_Doc_Template_Mgt",
     "SELECT document_id FROM Paragraphs GROUP BY document_id HAVING count(*) >= 2",
     "SELECT document_id FROM Paragraphs GROUP BY document_id HAVING count(*) >= 3"),
    ("aggregate_change", "world_1",
     "SELECT avg(GNP) , sum(population) FROM country WHERE GovernmentForm = 'US Territory'",
     "SELECT sum(GNP) , sum(population) FROM country WHERE GovernmentForm = 'US Territory'"),
    ("aggregate_change", "world_1",
     "SELECT sum(population) , avg(surfacearea) FROM country WHERE continent = 'North America' AND surfacearea > 3000",
     "SELECT avg(population) , avg(surfacearea) FROM country WHERE continent = 'North America' AND surfacearea > 3000"),
    ("aggregate_change", "dog_kennels",
     "SELECT avg(age) FROM Dogs WHERE dog_id IN (SELECT dog_id FROM Treatments)",
     "SELECT max(age) FROM Dogs WHERE dog_id IN (SELECT dog_id FROM Treatments)"),
    ("aggregate_change", "car_1",
     "SELECT avg(Weight) , YEAR FROM CARS_DATA GROUP BY YEAR",
     "SELECT sum(Weight) , YEAR FROM CARS_DATA GROUP BY YEAR"),
    ("aggregate_change", "cre_Doc_Template_Mgt",
     "SELECT template_type_code FROM Templates GROUP BY template_type_code ORDER BY count(*) DESC LIMIT 1",
     "SELECT template_type_code FROM Templates GROUP BY template_type_code ORDER BY sum(version_number) DESC LIMIT 1"),
    ("missing_condition", "world_1",
     "SELECT Name FROM country WHERE continent = 'Europe' AND Population = '80000'",
     "SELECT Name FROM country WHERE continent = 'Europe'"),
    ("operator_change", "concert_singer",
     "SELECT DISTINCT country FROM singer WHERE age > 20",
     "SELECT DISTINCT country FROM singer WHERE age >= 20"),
    ("connector_change", "cre_Doc_Template_Mgt",
     "SELECT template_id FROM Templates WHERE version_number > 5 OR template_type_code = 'PP'",
     "SELECT template_id FROM Templates WHERE version_number > 5 AND template_type_code = 'PP'"),
    ("condition_reorder", "concert_singer",
     "SELECT count(*) FROM concert WHERE YEAR = 2014 OR YEAR = 2015",
     "SELECT count(*) FROM concert WHERE YEAR = 2015 OR YEAR = 2014"),
    ("order_direction", "concert_singer",
     "SELECT name , capacity FROM stadium ORDER BY average DESC LIMIT 1",
     "SELECT name , capacity FROM stadium ORDER BY average ASC LIMIT 1"),
    ("set_operator_change", "concert_singer",
     "SELECT country FROM singer WHERE age > 40 INTERSECT SELECT country FROM singer WHERE age < 30",
     "SELECT country FROM singer WHERE age > 40 UNION SELECT country FROM singer WHERE age < 30"),
    ("nested_change", "dog_kennels",
     "SELECT count(*) FROM Dogs WHERE dog_id NOT IN (SELECT dog_id FROM Treatments)",
     "SELECT count(*) FROM Dogs WHERE dog_id NOT IN (SELECT professional_id FROM Treatments)"),
    ("missing_distinct", "world_1",
     "SELECT DISTINCT T1.Region FROM country AS T1 JOIN countrylanguage AS T2 ON T1.Code = T2.CountryCode WHERE T2.Language = 'English' OR T2.Language = 'Dutch'",
     "SELECT T1.Region FROM country AS T1 JOIN countrylanguage AS T2 ON T1.Code = T2.CountryCode WHERE T2.Language = 'English' OR T2.Language = 'Dutch'"),
    ("missing_join", "car_1",
     "SELECT T1.Model FROM CAR_NAMES AS T1 JOIN CARS_DATA AS T2 ON T1.MakeId = T2.Id ORDER BY T2.horsepower ASC LIMIT 1",
     "SELECT Model FROM car_names ORDER BY MakeId ASC LIMIT 1"),
    ("unparseable", "concert_singer",
     "SELECT count(*) FROM singer",
     "SELECT count( FROM singer"),
]


# Pairs whose canonical texts agree once aliases are renumbered, judged by
# hand: the identical pair and the alias swap that keeps the FROM order.
STRICT_EQUAL = {0, 6}

# ------------------------------------------------------------- databases

ROWS = 12


def sql_literal(v):
    if v is None:
        return "NULL"
    if isinstance(v, str):
        return "'" + v.replace("'", "''") + "'"
    return repr(v)


def database_script(spec, rng):
    db_id, tables, _, fks = spec
    words = ["France", "Germany", "Europe", "English", "Dutch", "Ford", "BK", "PP",
             "Virginia", "Republic", "US Territory", "T", "F", "fiat", "report", "Maria",
             "Ontario", "Caribbean", "North America", "Asia"]
    sql_type = {"number": "INTEGER", "text": "TEXT", "time": "TEXT", "others": "TEXT"}
    fk_target = {a: b for a, b in fks}
    values = {}
    lines = ["-- mini fixture database %s, generated by make_mini.py" % db_id]
    for t, cols in tables:
        defs = ", ".join('"%s" %s' % (c, sql_type[ty]) for c, ty in cols)
        lines.append('CREATE TABLE "%s" (%s);' % (t, defs))
    for t, cols in tables:
        for i in range(ROWS):
            row = []
            for c, ty in cols:
                key = "%s.%s" % (t, c)
                if key in fk_target and fk_target[key] in values:
                    v = rng.choice(values[fk_target[key]])
                elif ty == "number":
                    v = i + 1 if c.lower().endswith("id") else rng.choice(
                        [1, 2, 3, 4, 6, 8, 15, 20, 35, 45, 2014, 2015, 5000, 7000, 12000])
                    if rng.random() < 0.1 and not c.lower().endswith("id"):
                        v = rng.choice([2.5, 17.25])
                elif ty == "time":
                    v = "20%02d-0%d-1%d" % (rng.randrange(10, 20), rng.randrange(1, 10), rng.randrange(10))
                else:
                    v = rng.choice(words)
                    if rng.random() < 0.05:
                        v = None
                row.append(v)
                values.setdefault(key, []).append(v)
            lines.append('INSERT INTO "%s" VALUES (%s);' % (t, ", ".join(sql_literal(v) for v in row)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- oracle


def run_oracle(eval_dir, tables_path, pairs):
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump(pairs, f)
        path = f.name
    script = os.path.join(HERE, "..", "oracle", "spider_oracle.py")
    out = subprocess.run([sys.executable, script, "--eval-dir", eval_dir,
                          "--tables", tables_path, "--pairs", path],
                         check=True, capture_output=True, text=True).stdout
    os.unlink(path)
    return json.loads(out)


def write_json(path, obj):
    with open(path, "w") as f:
        json.dump(obj, f, indent=1, ensure_ascii=False)
        f.write("\n")


def load_existing(path):
    return json.load(open(path)) if os.path.exists(path) else None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", required=True)
    ap.add_argument("--oracle-eval-dir")
    args = ap.parse_args()
    os.makedirs(os.path.join(args.out, "db"), exist_ok=True)

    tables_path = os.path.join(args.out, "tables.json")
    write_json(tables_path, tables_json())

    def spider(rows):
        return [{"db_id": d, "question": q, "query": s} for d, q, s in rows]

    write_json(os.path.join(args.out, "train.json"), spider(TRAIN))
    write_json(os.path.join(args.out, "dev.json"), spider(DEV))

    def interactions(rows):
        return [{"database_id": d,
                 "interaction": [{"utterance": u, "query": s} for u, s in turns]}
                for d, turns in rows]

    write_json(os.path.join(args.out, "sparc_train.json"), interactions(SPARC_TRAIN))
    write_json(os.path.join(args.out, "sparc_dev.json"), interactions(SPARC_DEV))

    rng = random.Random(SEED)
    for spec in DATABASES:
        with open(os.path.join(args.out, "db", spec[0] + ".sql"), "w") as f:
            f.write(database_script(spec, rng))

    corpus = roundtrip_corpus()
    pairs = [{"category": c, "db_id": d, "gold": g, "pred": p, "strict": i in STRICT_EQUAL}
             for i, (c, d, g, p) in enumerate(EVAL_PAIRS)]
    rt_path = os.path.join(args.out, "roundtrip.json")
    ep_path = os.path.join(args.out, "eval_pairs.json")
    if args.oracle_eval_dir:
        rt_verdicts = run_oracle(args.oracle_eval_dir, tables_path,
                                 [{"db_id": e["db_id"], "gold": e["query"], "pred": e["query"]}
                                  for e in corpus])
        ep_verdicts = run_oracle(args.oracle_eval_dir, tables_path, pairs)
    else:
        old_rt, old_ep = load_existing(rt_path), load_existing(ep_path)
        rt_verdicts = [{"hardness": e.get("oracle_hardness")} for e in old_rt]
        ep_verdicts = [e["oracle"] for e in old_ep["pairs"]]
    for e, v in zip(corpus, rt_verdicts):
        e["oracle_hardness"] = v.get("hardness")
    for p, v in zip(pairs, ep_verdicts):
        p["oracle"] = v
    write_json(rt_path, corpus)
    totals = {"pairs": len(pairs),
              "strict": sum(p["strict"] for p in pairs),
              "set_match": sum(bool(p["oracle"].get("set_match")) for p in pairs)}
    write_json(ep_path, {"totals": totals, "pairs": pairs})


if __name__ == "__main__":
    main()
