//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use cpairs_core::catalog::resolve;
use cpairs_core::claims::{run_claims, HarnessConfig, Status};
use cpairs_core::engine::{complexity_homspace, complexity_pair, conjugate_by, generic_sum_codim};
use cpairs_core::linalg::{rank, Matrix, Scalar};
use cpairs_core::sampler::{sample_element, sample_pair, SamplerConfig};

const SEEDS: [u64; 3] = [1, 2, 3];

fn cli(args: &[&str]) -> (i32, Value) {
    let out = cpairs_cli::run(std::iter::once("cpairs").chain(args.iter().copied()));
    let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    if out.code != 0 {
        eprintln!("{args:?} exited {}: {}", out.code, out.stderr);
    }
    (out.code, v)
}

fn claim<'a>(v: &'a Value, id: &str) -> Option<&'a Value> {
    v["claims"].as_array()?.iter().find(|c| c["id"] == id)
}

fn records(c: &Value) -> &[Value] {
    c["records"].as_array().map_or(&[], Vec::as_slice)
}

fn quantity(rec: &Value, name: &str) -> Option<u64> {
    rec["quantities"].as_array()?.iter().find(|q| q["name"] == name)?["value"].as_u64()
}

fn record<'a>(c: &'a Value, instance: &str) -> Option<&'a Value> {
    records(c).iter().find(|r| r["instance"] == instance)
}

struct Criterion {
    name: &'static str,
    ok: bool,
    detail: String,
}

fn theorem_a() -> Criterion {
    let t = Instant::now();
    let (code, v) = cli(&["reproduce", "theorem-a", "--max-rank", "8", "--expect-paper"]);
    let elapsed = t.elapsed();
    let cases: Vec<u64> = claim(&v, "C11")
        .map(|c| {
            records(c)
                .iter()
                .filter(|r| r["status"] == "PASS")
                .filter_map(|r| quantity(r, "complexity"))
                .collect()
        })
        .unwrap_or_default();
    let ok = code == 0 && cases == [1, 1, 1, 1] && elapsed < Duration::from_secs(60);
    Criterion {
        name: "1 theorem-a: four complexity-one pairs under 1 min",
        ok,
        detail: format!("cases {cases:?}, {:.1}s", elapsed.as_secs_f64()),
    }
}

fn table1() -> Criterion {
    let t = Instant::now();
    let (code, v) = cli(&["reproduce", "table-1", "--max-param", "4", "--expect-paper"]);
    let elapsed = t.elapsed();
    let Some(c) = claim(&v, "C12") else {
        return Criterion {
            name: "2 table-1",
            ok: false,
            detail: "no report".into(),
        };
    };
    let list = |inst: &str| -> Vec<u64> {
        record(c, inst)
            .and_then(|r| r["quantities"][0]["value"].as_array().cloned())
            .unwrap_or_default()
            .iter()
            .filter_map(Value::as_u64)
            .collect()
    };
    let recovered = list("rows recovered from the decomposition and spherical tables");
    let selected = list("rows with K a spherical Levi");
    let diag_ok = ["row 2: G/P x G/H for T1.2.n2", "row 4: G/P x G/H for T1.4.n4", "row 5: G/P x G/H for T1.5", "row 7: G/P x G/H for T1.7"]
        .iter()
        .all(|inst| {
            record(c, inst).is_some_and(|r| {
                quantity(r, "diagonal") == Some(0) && quantity(r, "levi_side") == Some(0) && r["status"] == "PASS"
            })
        });
    let ok = code == 0
        && recovered == (1..=8).collect::<Vec<_>>()
        && selected == [2, 4, 5, 7]
        && diag_ok
        && elapsed < Duration::from_secs(300);
    Criterion {
        name: "2 table-1: 8 rows, {2,4,5,7} selected, diagonal = Levi side = 0, under 5 min",
        ok,
        detail: format!("recovered {recovered:?}, selected {selected:?}, diagonal checks {diag_ok}, {:.1}s", elapsed.as_secs_f64()),
    }
}

fn table3() -> Criterion {
    let (code, v) = cli(&["verify", "table3", "--expect-paper"]);
    let (code_spin, vs) = cli(&["verify", "table3", "--enable-spin", "--expect-paper"]);
    let count = |v: &Value, status: &str| claim(v, "C13").map_or(0, |c| records(c).iter().filter(|r| r["status"] == status).count());
    let so8_spin = claim(&vs, "C13").is_some_and(|c| {
        ["T3.9", "T3.10", "T3.11", "T3.12", "T3.13", "T3.14"]
            .iter()
            .all(|i| record(c, i).is_some_and(|r| r["status"] == "PASS"))
    });
    let control = claim(&v, "C13")
        .and_then(|c| record(c, "(CARTAN.sl2, CARTAN.sl2)"))
        .is_some_and(|r| r["status"] == "PASS" && quantity(r, "decomposition") != Some(0));
    let ok = code == 0 && code_spin == 0 && so8_spin && control && count(&v, "FAIL") == 0;
    Criterion {
        name: "3 table3: classical rows are decompositions, spin rows with --enable-spin, torus control fails",
        ok,
        detail: format!(
            "{} pass without spin, {} with spin, spin rows {so8_spin}, control {control}",
            count(&v, "PASS"),
            count(&vs, "PASS")
        ),
    }
}

fn table4() -> Criterion {
    let (code, v) = cli(&["verify", "table4", "--expect-paper"]);
    let Some(c) = claim(&v, "C14") else {
        return Criterion {
            name: "4 table4",
            ok: false,
            detail: "no report".into(),
        };
    };
    let computed: Vec<&Value> = records(c).iter().filter(|r| quantity(r, "homspace").is_some()).collect();
    let zeros = computed.iter().filter(|r| r["status"] == "PASS" && quantity(r, "homspace") == Some(0)).count();
    let ones = computed.iter().filter(|r| r["status"] == "PASS" && quantity(r, "homspace") == Some(1)).count();
    let spot = [("T4.Z.sl4-sp4", 0), ("T4.Z.so7-g2", 0), ("T4.O.so5-so3", 1), ("T4.O.sp4-sp2", 1)]
        .iter()
        .all(|(id, want)| record(c, id).is_some_and(|r| quantity(r, "homspace") == Some(*want)));
    let ok = code == 0 && zeros >= 10 && ones >= 6 && spot && c["status"] == "PASS";
    Criterion {
        name: "4 table4: >= 10 zeros and >= 6 ones confirmed, including the four spot checks",
        ok,
        detail: format!("{zeros} zeros, {ones} ones, spot checks {spot}"),
    }
}

fn cfg(seed: u64, samples: usize) -> SamplerConfig {
    SamplerConfig {
        seed,
        samples,
        ..SamplerConfig::default()
    }
}

const PAIRS: [(&str, &str); 5] = [
    ("CARTAN.sl2", "HORO.sl2.borel"),
    ("T4.Z.so4-gl2", "HORO.so4.unipotent"),
    ("T4.Z.sl3-so3", "HORO.sl3.omit1.comm"),
    ("T4.Z.sl4-sp4", "T4.Z.sl4-sgl3xgl1"),
    ("HORO.sl3.unipotent", "CARTAN.sl3"),
];

fn invariance(seed: u64) -> bool {
    PAIRS.iter().all(|(a, b)| {
        let (e1, e2) = (resolve(a, false).unwrap(), resolve(b, false).unwrap());
        let c = cfg(seed, 5);
        let base = complexity_pair(&e1, &e2, &c).unwrap().value;
        let swapped = complexity_pair(&e2, &e1, &c).unwrap().value;
        let r = e1.parent();
        let g = sample_element(r, &c, 1000 + seed);
        let conj = generic_sum_codim(r, e1.sub_borel(), &conjugate_by(e2.sub_borel(), &g), &c).unwrap().value;
        base == swapped && base == conj
    })
}

fn monotone(seed: u64) -> bool {
    let c = cfg(seed, 5);
    let pair = |a: &str, b: &str| complexity_pair(&resolve(a, false).unwrap(), &resolve(b, false).unwrap(), &c).unwrap().value;
    let hom = |a: &str| complexity_homspace(&resolve(a, false).unwrap(), &c).unwrap().value;
    pair("CARTAN.sl3", "HORO.sl3.borel") <= pair("CARTAN.sl3", "HORO.sl3.unipotent")
        && pair("T4.Z.sl4-sp4", "P.sl4.omit1") <= pair("T4.Z.sl4-sp4", "HORO.sl4.omit1.comm")
        && hom("T4.Z.sl4-sgl3xgl1") <= hom("T4.Z.sl4-sl3xsl1")
        && hom("P.so5.omit1") <= hom("HORO.so5.omit1.comm")
}

fn exact_samples(seed: u64) -> bool {
    ["sl3", "gl2", "sp4", "so5", "so6"].iter().all(|alg| {
        let r = resolve(&format!("WHOLE.{alg}"), false).unwrap();
        let r = r.parent();
        let c = cfg(seed, 5);
        let id = Matrix::identity(r.size());
        (0..3).all(|i| {
            let s = sample_element(r, &c, i);
            let (p, q) = sample_pair(r, &c, i);
            let preserves = |g: &Matrix| match r.form() {
                Some(j) => g.transpose().mul(j).unwrap().mul(g).unwrap() == *j,
                None => true,
            };
            [&s, &p, &q]
                .iter()
                .all(|s| s.g.mul(&s.g_inv).unwrap() == id && preserves(&s.g))
        })
    })
}

fn generic_at_5_and_25(seed: u64) -> bool {
    ["T4.Z.sl4-sp4", "T4.O.sp4-sp2", "T4.Z.so5-gl2", "CARTAN.sl3", "G2.so7"].iter().all(|id| {
        let e = resolve(id, false).unwrap();
        complexity_homspace(&e, &cfg(seed, 5)).unwrap().value == complexity_homspace(&e, &cfg(seed, 25)).unwrap().value
    })
}

fn float_rank(m: &DMatrix<f64>) -> usize {
    let sv = m.clone().svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0, f64::max);
    sv.iter().filter(|&&s| s > 1e-8 * top.max(1.0)).count()
}

fn rank_agrees(seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = 0;
    for _ in 0..100 {
        let rows = rng.random_range(1..=30);
        let cols = rng.random_range(1..=30);
        let inner = rng.random_range(0..=rows.min(cols));
        let a: Vec<i64> = (0..rows * inner).map(|_| rng.random_range(-5..=5)).collect();
        let b: Vec<i64> = (0..inner * cols).map(|_| rng.random_range(-5..=5)).collect();
        let entry = |i: usize, j: usize| (0..inner).map(|k| a[i * inner + k] * b[k * cols + j]).sum::<i64>();
        let exact = rank(&Matrix::from_fn(rows, cols, |i, j| Scalar::from_int(entry(i, j))));
        let float = float_rank(&DMatrix::from_fn(rows, cols, |i, j| entry(i, j) as f64));
        agree += usize::from(exact == float);
    }
    (agree, 100)
}

fn properties() -> Criterion {
    let mut failures = Vec::new();
    let mut rank_total = (0, 0);
    for seed in SEEDS {
        let h = HarnessConfig::with_seed(seed);
        let checks = [
            ("invariance", invariance(seed)),
            ("monotonicity", monotone(seed)),
            ("sampler exactness", exact_samples(seed)),
            ("k=5 vs k=25", generic_at_5_and_25(seed)),
            (
                "sum bound and interchange",
                run_claims(&["C9".into(), "C10".into()], &h)
                    .unwrap()
                    .iter()
                    .all(|c| c.status == Status::Pass),
            ),
        ];
        let (a, n) = rank_agrees(seed);
        rank_total = (rank_total.0 + a, rank_total.1 + n);
        if a != n {
            failures.push(format!("seed {seed}: exact-vs-float rank {a}/{n}"));
        }
        failures.extend(checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| format!("seed {seed}: {n}")));
    }
    Criterion {
        name: "5 properties on seeds 1, 2, 3",
        ok: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("all hold; exact and SVD ranks agree on {}/{}", rank_total.0, rank_total.1)
        } else {
            failures.join("; ")
        },
    }
}

fn claims_run() -> Criterion {
    let (code, v) = cli(&["claims", "run", "--expect-paper"]);
    let claims = v["claims"].as_array().cloned().unwrap_or_default();
    let ids: Vec<String> = claims.iter().filter_map(|c| c["id"].as_str().map(String::from)).collect();
    let all = ids == (1..=15).map(|i| format!("C{i}")).collect::<Vec<_>>();
    let asserted_pass = claims
        .iter()
        .filter(|c| c["mode"] == "asserted")
        .all(|c| c["status"] == "PASS");
    let witnessed = claims.iter().filter(|c| c["mode"] == "reported").all(|c| {
        records(c).iter().all(|r| {
            r["quantities"]
                .as_array()
                .is_some_and(|qs| qs.iter().all(|q| q["result"].is_null() || !q["result"]["witnesses"].as_array().is_none_or(Vec::is_empty)))
        })
    });
    // The (torus, Borel) pair in SL(2), replayed from its recorded ids and seed.
    let replay = claims
        .iter()
        .filter(|c| c["mode"] == "reported")
        .flat_map(|c| records(c).iter().map(move |r| (c, r)))
        .find(|(_, r)| r["ids"] == serde_json::json!(["CARTAN.sl2", "HORO.sl2.borel"]))
        .is_some_and(|(c, r)| {
            let seed = c["seed"].as_u64().unwrap().to_string();
            let samples = c["samples"].as_u64().unwrap().to_string();
            let (code, again) = cli(&["complexity", "pair", "CARTAN.sl2", "HORO.sl2.borel", "--seed", &seed, "--samples", &samples]);
            code == 0
                && again["results"][0]["value"].as_u64() == quantity(r, "pair")
                && again["results"][0]["witnesses"] == r["quantities"][0]["result"]["witnesses"]
        });
    Criterion {
        name: "6 claims run: C1-C15, asserted claims pass, reported claims carry witnesses",
        ok: code == 0 && all && asserted_pass && witnessed && replay,
        detail: format!("ids complete {all}, asserted pass {asserted_pass}, witnesses {witnessed}, torus-Borel replay {replay}"),
    }
}

fn main() {
    let criteria: [fn() -> Criterion; 6] = [theorem_a, table1, table3, table4, properties, claims_run];
    let mut failed = 0;
    for f in criteria {
        let c = f();
        println!("{} {} ({})", if c.ok { "PASS" } else { "FAIL" }, c.name, c.detail);
        failed += usize::from(!c.ok);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
