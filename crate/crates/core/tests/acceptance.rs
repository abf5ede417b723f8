//! One PASS/FAIL line per acceptance criterion. Every expected count is
//! recomputed here by a brute-force oracle before it is compared.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use krcrystal::crystal::{generate_graph, graph_isomorphism, verify_axioms, verify_strings, Crystal, Dir, GenOptions};
use krcrystal::involutions::{check_all, pr_order_witness, promotion_map};
use krcrystal::kr_a::{KrA, PromotionKr, TypeA};
use krcrystal::kr_d::DClass;
use krcrystal::kr_folded::{Folded, KrFolded};
use krcrystal::rsk::{ell, kappa_nw, kappa_se, BiMatrix};
use krcrystal::suites::{closure_folded, gluing, oracle_spin, transport_a, transport_folded, well_defined};
use krcrystal::tableau::{count_ssyt, p_tableau, Alphabet, Partition};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    match failures.first() {
        None => Outcome { ok: true, detail: summary },
        Some(first) => Outcome { ok: false, detail: format!("{} failure(s), first: {first}", failures.len()) },
    }
}

fn type_a_grid() -> Vec<(usize, usize, usize)> {
    (2..=5).flat_map(|n| (1..n).flat_map(move |r| (1..=3).map(move |s| (n, r, s)))).collect()
}

fn folded_grid() -> Vec<(u8, usize, usize)> {
    [1u8, 2].into_iter().flat_map(|e| (2..=3).flat_map(move |n| (1..=2).map(move |s| (e, n, s)))).collect()
}

fn d_grid() -> Vec<(usize, usize, usize)> {
    (1..=2).flat_map(|s| [(4, 4, s), (4, 3, s)]).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut fails = Vec::new();
    for (n, r, s) in type_a_grid() {
        let kr = KrA::new(n, r, s).unwrap();
        let g = generate_graph(&kr, &[kr.highest()], GenOptions::default()).unwrap().graph;
        let want = common::count_fillings(&vec![s; r], n as u8);
        if g.len() != want {
            fails.push(format!("({n},{r},{s}): {} vertices, oracle {want}", g.len()));
        }
        if !verify_axioms(&g).passed() {
            fails.push(format!("({n},{r},{s}): axioms"));
        }
        if (0..n).any(|i| !verify_strings(&g, i).passed()) {
            fails.push(format!("({n},{r},{s}): strings"));
        }
        let p = PromotionKr::new(n, r, s).unwrap();
        let h = generate_graph(&p, &[p.highest()], GenOptions::default()).unwrap().graph;
        if let Err(e) = graph_isomorphism(&g, &h) {
            fails.push(format!("({n},{r},{s}): {e}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        fails.push(format!("runtime {secs:.1}s"));
    }
    outcome(fails, format!("{} instances, {secs:.2}s", type_a_grid().len()))
}

fn criterion_2() -> Outcome {
    let kr = KrA::new(4, 2, 2).unwrap();
    let gen = generate_graph(&kr, &[kr.highest()], GenOptions::default()).unwrap();
    let mut fails = Vec::new();
    let want = common::count_fillings(&[2, 2], 4);
    if gen.graph.len() != want || want != 20 {
        fails.push(format!("{} vertices, oracle {want}", gen.graph.len()));
    }
    for &(src, color, dst) in &gen.graph.edges {
        let (x, y) = (gen.elements[src].dense(), gen.elements[dst].dense());
        let diff: Vec<i64> = (0..2).flat_map(|p| (0..2).map(move |q| y[p][q] as i64 - x[p][q] as i64)).collect();
        let expected = match color {
            2 => vec![1, 0, 0, 0],
            0 => vec![0, 0, 0, -1],
            _ => continue,
        };
        if diff != expected {
            fails.push(format!("{}-edge from {}", color, gen.elements[src].to_text()));
        }
    }
    outcome(fails, format!("{} vertices, {} edges", gen.graph.len(), gen.graph.edges.len()))
}

fn criterion_3() -> Outcome {
    let mut fails = Vec::new();
    let mut checks = 0;
    for n in 2..=5 {
        for r in 1..n {
            let rep = transport_a(&TypeA::new(n, r).unwrap(), 4);
            checks += rep.checks;
            fails.extend(rep.violations.iter().map(|v| format!("n={n} r={r} {} {} i={}", v.rule, v.vertex, v.color)));
        }
    }
    let a = TypeA::new(6, 3).unwrap();
    let m = BiMatrix::parse(a.row_alphabet(), a.col_alphabet(), "1 0 1 / 2 1 0 / 0 2 0").unwrap();
    let (sorted_a, sorted_b) = common::biword_by_sorting(m.dense());
    let w = m.to_biword();
    let labels = |alph: Alphabet, xs: &[u8]| xs.iter().map(|&x| alph.label(x)).collect::<Vec<i32>>();
    let worked: [(bool, &str); 8] = [
        ((w.a.clone(), w.b.clone()) == (sorted_a, sorted_b), "biword order"),
        (labels(m.row_alphabet, &w.a) == [-2, -2, -3, -1, -1, -2, -3], "biword a"),
        (labels(m.col_alphabet, &w.b) == [4, 4, 4, 5, 5, 5, 6], "biword b"),
        (kappa_nw(&m).0.to_text() == "-3 -3 -2 -2 / -2 -1 -1", "P"),
        (kappa_nw(&m).1.to_text() == "4 4 4 6 / 5 5 5", "Q"),
        (kappa_se(&m).0.to_text() == ". -3 -2 -2 / -3 -2 -1 -1", "S"),
        (kappa_se(&m).1.to_text() == ". 4 4 4 / 5 5 5 6", "T"),
        (ell(&m) == 4 && common::longest_decreasing_by_subsets(&m.a_word()) == 4, "ℓ"),
    ];
    fails.extend(worked.iter().filter(|(ok, _)| !ok).map(|(_, what)| format!("worked {what}")));
    let (s, t) = kappa_se(&m);
    let raised = a.se_op(&s, &t, 3, Dir::Raise).unwrap().unwrap();
    if raised.0.to_text() != ". . -2 -2 / -3 -2 -1 -1" || raised.1.to_text() != ". . 4 4 / 5 5 5 6" {
        fails.push("worked ẽ_3".into());
    }
    outcome(fails, format!("{checks} transport checks"))
}

fn criterion_4() -> Outcome {
    let a = TypeA::new(6, 3).unwrap();
    let m = BiMatrix::parse(a.row_alphabet(), a.col_alphabet(), "1 0 1 / 2 1 0 / 0 2 0").unwrap();
    let mut fails = Vec::new();
    for (got, want) in [
        (a.glue_se(&m, 4).unwrap().to_text(), "1 1 3 3 / 2 4 4 4 / 5 5 5 6"),
        (a.glue_se(&m, 5).unwrap().to_text(), "1 1 1 3 3 / 2 2 4 4 4 / 3 5 5 5 6"),
        (a.glue_nw(&m, 4).unwrap().to_text(), "4 4 4 6 / 5 5 5 1 / 1 2 3 3"),
    ] {
        if got != want {
            fails.push(format!("glued {got}, expected {want}"));
        }
    }
    let mut checks = 0;
    for (n, r, s) in type_a_grid() {
        let rep = gluing(&KrA::new(n, r, s).unwrap(), GenOptions::default()).unwrap();
        checks += rep.checks;
        fails.extend(rep.violations.iter().map(|v| format!("({n},{r},{s}) {} {}", v.rule, v.vertex)));
    }
    outcome(fails, format!("3 worked gluings, {checks} round trips"))
}

fn criterion_5() -> Outcome {
    let mut fails = Vec::new();
    for (eps, n, s) in folded_grid() {
        let kr = KrFolded::new(n, eps, s).unwrap();
        let g = generate_graph(&kr, &[kr.highest()], GenOptions::default()).unwrap().graph;
        if !verify_axioms(&g).passed() || (0..=n).any(|i| !verify_strings(&g, i).passed()) {
            fails.push(format!("ε={eps} n={n} s={s}: axioms/strings"));
        }
        let want = common::stretched_fillings(n, eps as usize, s);
        if g.len() != want {
            fails.push(format!("ε={eps} n={n} s={s}: {} vertices, oracle {want}", g.len()));
        }
        if eps == 1 && s == 1 && g.len() != 1 << n {
            fails.push(format!("|B^{n},1| = {} ≠ 2^{n}", g.len()));
        }
        if eps == 2 && n == 2 && s == 2 && (g.len() != 14 || want != 14) {
            fails.push(format!("|B^2,2| of C_2 = {}", g.len()));
        }
    }
    let mut checks = 0;
    for eps in [1u8, 2] {
        for n in 2..=3 {
            let f = Folded::new(n, eps).unwrap();
            for rep in [transport_folded(&f, 4), closure_folded(&f, 4)] {
                checks += rep.checks;
                fails.extend(rep.violations.iter().map(|v| format!("ε={eps} n={n} {} {}", v.rule, v.vertex)));
            }
        }
    }
    outcome(fails, format!("{} instances, {checks} transport/closure checks", folded_grid().len()))
}

fn criterion_6() -> Outcome {
    let mut fails = Vec::new();
    let mut checks = 0;
    for (n, r, s) in d_grid() {
        let c = DClass::new(n, r, s).unwrap();
        let g = generate_graph(&c, &[c.highest()], GenOptions::default()).unwrap().graph;
        let want = common::parity_fillings(n, s, r == n);
        if g.len() != want {
            fails.push(format!("B^{r},{s}: {} vertices, oracle {want}", g.len()));
        }
        if !verify_axioms(&g).passed() || (0..=n).any(|i| !verify_strings(&g, i).passed()) {
            fails.push(format!("B^{r},{s}: axioms/strings"));
        }
        for rep in [well_defined(&c, GenOptions::default()).unwrap(), oracle_spin(&c, GenOptions::default()).unwrap()] {
            checks += rep.checks;
            fails.extend(rep.violations.iter().map(|v| format!("B^{r},{s} {} {} i={}", v.rule, v.vertex, v.color)));
        }
    }
    let figure = common::parity_fillings(4, 2, true);
    let odd = common::parity_fillings(4, 1, false);
    if figure != 35 || odd != 8 {
        fails.push(format!("oracle counts {figure}, {odd}"));
    }
    outcome(fails, format!("|B^4,2| = {figure}, |B^3,1| = {odd}, {checks} class/oracle checks"))
}

fn criterion_7() -> Outcome {
    let mut fails = Vec::new();
    let mut checks = 0;
    let mut record = |label: String, results: Vec<krcrystal::involutions::IdentityCheck>| {
        for c in results {
            checks += c.report.checks;
            if let Some(v) = c.report.violations.first() {
                fails.push(format!("{label} {:?}: {} at {}", c.name, v.rule, v.vertex));
            }
        }
    };
    for (n, r, s) in type_a_grid() {
        let kr = KrA::new(n, r, s).unwrap();
        let gen = generate_graph(&kr, &[kr.highest()], GenOptions::default()).unwrap();
        let pr = promotion_map(&kr, &gen).unwrap();
        record(format!("A({n},{r},{s})"), check_all(&gen.graph, Some(&pr)).unwrap());
    }
    for (eps, n, s) in folded_grid() {
        let kr = KrFolded::new(n, eps, s).unwrap();
        let g = generate_graph(&kr, &[kr.highest()], GenOptions::default()).unwrap().graph;
        record(format!("folded(ε={eps},{n},{s})"), check_all(&g, None).unwrap());
    }
    for (n, r, s) in d_grid() {
        let c = DClass::new(n, r, s).unwrap();
        let g = generate_graph(&c, &[c.highest()], GenOptions::default()).unwrap().graph;
        record(format!("D({n},{r},{s})"), check_all(&g, None).unwrap());
    }
    let witness = pr_order_witness(&Partition::new(vec![2, 1]).unwrap(), 3);
    match &witness {
        Some(t) => checks += usize::from(!t.is_empty()),
        None => fails.push("no pr³ ≠ id witness in SST_[3]((2,1))".into()),
    }
    let shown = witness.map_or(String::new(), |t| t.to_text());
    outcome(fails, format!("{checks} identity checks, pr³ witness {shown}"))
}

fn criterion_8() -> Outcome {
    let mut fails = Vec::new();
    // SSYT enumeration oracle against the hook-content count
    for n in 1..=5u8 {
        for shape in common::partitions_in_box(3, 3) {
            let brute = common::count_fillings(&shape, n) as u128;
            if count_ssyt(&Partition::new(shape.clone()).unwrap(), n as usize) != brute {
                fails.push(format!("count {shape:?} over [{n}]"));
            }
        }
    }
    // Knuth-class closure oracle against insertion
    let a = Alphabet::unbarred(3);
    let mut knuth_words = 0;
    for len in 0..=5 {
        let classes = common::knuth_classes(len, 3);
        let mut by_p: HashMap<String, usize> = HashMap::new();
        let mut by_class: HashMap<usize, String> = HashMap::new();
        for (w, &c) in &classes {
            let p = p_tableau(a, w).to_text();
            if *by_p.entry(p.clone()).or_insert(c) != c || *by_class.entry(c).or_insert(p.clone()) != p {
                fails.push(format!("knuth {w:?}"));
            }
            knuth_words += 1;
        }
    }
    // sl_2 string walks against the stored ε, φ at the highest elements
    for (n, r, s) in type_a_grid() {
        let kr = KrA::new(n, r, s).unwrap();
        let z = kr.highest();
        let walked = (common::walk(&z, |x| kr.raise(x, 0)), common::walk(&z, |x| kr.lower(x, r)));
        if walked != (s, s) || kr.epsilon(&z, 0) != Some(s as i64) || kr.phi(&z, r) != Some(s as i64) {
            fails.push(format!("strings at the zero matrix of ({n},{r},{s})"));
        }
        let p = PromotionKr::new(n, r, s).unwrap();
        if common::walk(&p.highest(), |x| p.raise(x, 0)) != s {
            fails.push(format!("promotion ε_0 of ({n},{r},{s})"));
        }
    }
    for (eps, n, s) in folded_grid() {
        let kr = KrFolded::new(n, eps, s).unwrap();
        let z = kr.highest();
        if kr.epsilon(&z, 0) != Some(common::walk(&z, |x| kr.raise(x, 0)) as i64) {
            fails.push(format!("folded ε_0 at zero, ε={eps} n={n} s={s}"));
        }
    }
    // the worked constants used above are oracle outputs
    let derived = [
        (common::count_fillings(&[2, 2], 4), 20),
        (common::stretched_fillings(2, 2, 2), 14),
        (common::stretched_fillings(2, 1, 1), 4),
        (common::parity_fillings(4, 2, true), 35),
        (common::parity_fillings(4, 1, false), 8),
        (common::count_fillings(&[1], 4), 4),
        (common::count_fillings(&[1, 1], 4), 6),
    ];
    fails.extend(derived.iter().filter(|(o, v)| o != v).map(|(o, v)| format!("oracle {o} vs stated {v}")));
    outcome(fails, format!("{knuth_words} words closed, {} constants rederived", derived.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("type A matrix model", criterion_1),
        ("B^2,2 of A_3^(1) and its corner edges", criterion_2),
        ("RSK transport", criterion_3),
        ("gluing", criterion_4),
        ("folded types", criterion_5),
        ("type D_n^(1)", criterion_6),
        ("involution identities", criterion_7),
        ("oracle hygiene", criterion_8),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        all &= out.ok;
        println!("{} criterion {}: {name} ({})", if out.ok { "PASS" } else { "FAIL" }, k + 1, out.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
