//! Named verification suites over the KR models, shared by the command
//! line and the acceptance run.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::{
    generate_graph, graph_isomorphism, verify_axioms, verify_strings, Crystal, CrystalGraph, Dir, Family, GenOptions,
    Generated, Report, TensorPower, Violation,
};
use crate::error::{CrystalError, Result};
use crate::involutions::{check_all, promotion_map};
use crate::kr_a::{KrA, PromotionKr, TypeA};
use crate::kr_d::{DClass, SpinCrystal, SpinSide};
use crate::kr_folded::{Folded, KrFolded};
use crate::rsk::{kappa_nw, kappa_se, BiMatrix};
use crate::tableau::insertion::{rectify, Corner};
use crate::tableau::ssyt::{count_ssyt, enumerate_ssyt_skew};
use crate::tableau::{Partition, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyName {
    A,
    Dtwisted,
    C,
    D1,
}

impl FromStr for FamilyName {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(FamilyName::A),
            "Dtwisted" | "dtwisted" => Ok(FamilyName::Dtwisted),
            "C" | "c" => Ok(FamilyName::C),
            "D1" | "d1" | "D" => Ok(FamilyName::D1),
            _ => Err(CrystalError::InvalidParameters(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Count,
    Axioms,
    Strings,
    IsoPromotion,
    Transport,
    Gluing,
    Closure,
    OracleSpin,
    WellDefined,
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Count,
        Suite::Axioms,
        Suite::Strings,
        Suite::IsoPromotion,
        Suite::Transport,
        Suite::Gluing,
        Suite::Closure,
        Suite::OracleSpin,
        Suite::WellDefined,
        Suite::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Count => "count",
            Suite::Axioms => "axioms",
            Suite::Strings => "strings",
            Suite::IsoPromotion => "iso-promotion",
            Suite::Transport => "transport",
            Suite::Gluing => "gluing",
            Suite::Closure => "closure",
            Suite::OracleSpin => "oracle-spin",
            Suite::WellDefined => "well-defined",
            Suite::Identities => "identities",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CrystalError::InvalidParameters(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub gen: GenOptions,
    /// Entry-sum bound for the exhaustive transport and closure checks.
    pub max_total: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { gen: GenOptions::default(), max_total: 4 }
    }
}

fn record(rep: &mut Report, ok: bool, rule: &str, vertex: String, color: usize, detail: impl FnOnce() -> String) {
    rep.checks += 1;
    if !ok {
        rep.violations.push(Violation { rule: rule.to_string(), vertex, color, detail: detail() });
    }
}

/// A KR crystal in one of the supported families.
#[derive(Clone, Debug)]
pub enum Instance {
    A(KrA),
    Folded(KrFolded),
    D(DClass),
}

impl Instance {
    /// `r` is required for types A and D and ignored otherwise.
    pub fn new(family: FamilyName, n: usize, r: Option<usize>, s: usize) -> Result<Self> {
        let need_r = || r.ok_or_else(|| CrystalError::InvalidParameters("--r is required for this family".into()));
        match family {
            FamilyName::A => Ok(Instance::A(KrA::new(n, need_r()?, s)?)),
            FamilyName::Dtwisted => Ok(Instance::Folded(KrFolded::new(n, 1, s)?)),
            FamilyName::C => Ok(Instance::Folded(KrFolded::new(n, 2, s)?)),
            FamilyName::D1 => Ok(Instance::D(DClass::new(n, need_r()?, s)?)),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Instance::A(k) => k.context().family,
            Instance::Folded(k) => k.context().family,
            Instance::D(k) => k.context().family,
        }
    }

    pub fn graph(&self, opts: GenOptions) -> Result<CrystalGraph> {
        Ok(match self {
            Instance::A(k) => generate_graph(k, &[k.highest()], opts)?.graph,
            Instance::Folded(k) => generate_graph(k, &[k.highest()], opts)?.graph,
            Instance::D(k) => generate_graph(k, &[k.highest()], opts)?.graph,
        })
    }

    /// The cardinality predicted by the tableau description.
    pub fn expected_count(&self) -> u128 {
        match self {
            Instance::A(k) => count_ssyt(&Partition::rectangle(k.a.r, k.s), k.a.n),
            Instance::Folded(k) => {
                let e = k.f.eps as usize;
                Partition::rectangle(k.f.n, k.s)
                    .subpartitions()
                    .iter()
                    .map(|l| {
                        let stretched = Partition::new(l.parts().iter().map(|&p| e * p).collect()).expect("partition");
                        count_ssyt(&stretched, k.f.n)
                    })
                    .sum()
            }
            Instance::D(k) => k.d.enumerate_normal(k.s, k.parity).len() as u128,
        }
    }

    pub fn applicable(&self) -> Vec<Suite> {
        let specific: &[Suite] = match self {
            Instance::A(_) => &[Suite::IsoPromotion, Suite::Transport, Suite::Gluing],
            Instance::Folded(_) => &[Suite::Transport, Suite::Closure],
            Instance::D(_) => &[Suite::OracleSpin, Suite::WellDefined],
        };
        Suite::ALL
            .into_iter()
            .filter(|s| matches!(s, Suite::Count | Suite::Axioms | Suite::Strings | Suite::Identities) || specific.contains(s))
            .collect()
    }

    pub fn run(&self, suite: Suite, opts: &SuiteOptions) -> Result<Report> {
        if !self.applicable().contains(&suite) {
            return Err(CrystalError::InvalidParameters(format!("suite {suite} does not apply to {:?}", self.family())));
        }
        match suite {
            Suite::Count => {
                let g = self.graph(opts.gen)?;
                let want = self.expected_count();
                let mut rep = Report::default();
                record(&mut rep, g.len() as u128 == want, "count", String::new(), 0, || format!("{} vertices, expected {want}", g.len()));
                Ok(rep)
            }
            Suite::Axioms => Ok(verify_axioms(&self.graph(opts.gen)?)),
            Suite::Strings => {
                let g = self.graph(opts.gen)?;
                let mut rep = Report::default();
                for &i in &g.indices {
                    rep.merge(verify_strings(&g, i));
                }
                Ok(rep)
            }
            Suite::Identities => {
                let mut rep = Report::default();
                let checks = match self {
                    Instance::A(k) => {
                        let gen = generate_graph(k, &[k.highest()], opts.gen)?;
                        let pr = promotion_map(k, &gen)?;
                        check_all(&gen.graph, Some(&pr))?
                    }
                    _ => check_all(&self.graph(opts.gen)?, None)?,
                };
                for c in checks {
                    rep.merge(c.report);
                }
                Ok(rep)
            }
            Suite::IsoPromotion => match self {
                Instance::A(k) => iso_promotion(k, opts.gen),
                _ => unreachable!(),
            },
            Suite::Transport => match self {
                Instance::A(k) => Ok(transport_a(&k.a, opts.max_total)),
                Instance::Folded(k) => Ok(transport_folded(&k.f, opts.max_total)),
                Instance::D(_) => unreachable!(),
            },
            Suite::Gluing => match self {
                Instance::A(k) => gluing(k, opts.gen),
                _ => unreachable!(),
            },
            Suite::Closure => match self {
                Instance::Folded(k) => Ok(closure_folded(&k.f, opts.max_total)),
                _ => unreachable!(),
            },
            Suite::OracleSpin => match self {
                Instance::D(k) => oracle_spin(k, opts.gen),
                _ => unreachable!(),
            },
            Suite::WellDefined => match self {
                Instance::D(k) => well_defined(k, opts.gen),
                _ => unreachable!(),
            },
        }
    }
}

/// The matrix model against the promotion model of rectangular tableaux.
pub fn iso_promotion(k: &KrA, opts: GenOptions) -> Result<Report> {
    let g = generate_graph(k, &[k.highest()], opts)?.graph;
    let p = PromotionKr::new(k.a.n, k.a.r, k.s)?;
    let h = generate_graph(&p, &[p.highest()], opts)?.graph;
    let mut rep = Report::default();
    let iso = graph_isomorphism(&g, &h);
    record(&mut rep, iso.is_ok(), "iso-promotion", String::new(), 0, || iso.unwrap_err().0);
    Ok(rep)
}

/// `κ^↘ ∘ x̃_i = x̃_i ∘ κ^↘` for `i ∈ I_0` and `κ^↖ ∘ x̃_i = x̃_i ∘ κ^↖` for
/// `i ∈ I_r`, on every ambient matrix of entry sum at most `max_total`.
pub fn transport_a(a: &TypeA, max_total: u32) -> Report {
    let mut rep = Report::default();
    for m in BiMatrix::enumerate(a.row_alphabet(), a.col_alphabet(), max_total) {
        for i in a.indices() {
            for dir in [Dir::Raise, Dir::Lower] {
                let img = a.matrix_op(&m, i, dir).expect("index in range");
                if i != 0 {
                    let (s, t) = kappa_se(&m);
                    let lhs = img.as_ref().map(kappa_se);
                    let rhs = a.se_op(&s, &t, i, dir).expect("anti-normal pair");
                    record(&mut rep, lhs == rhs, "kappa-se", m.to_text(), i, || format!("{dir:?}: {lhs:?} vs {rhs:?}"));
                }
                if i != a.r {
                    let (p, q) = kappa_nw(&m);
                    let lhs = img.as_ref().map(kappa_nw);
                    let rhs = a.nw_op(&p, &q, i, dir).expect("normal pair");
                    record(&mut rep, lhs == rhs, "kappa-nw", m.to_text(), i, || format!("{dir:?}: {lhs:?} vs {rhs:?}"));
                }
            }
        }
    }
    rep
}

/// `unglue ∘ glue = id` on every element in both corners, and the corner
/// cells moved by `f̃_r` and `ẽ_0`.
pub fn gluing(k: &KrA, opts: GenOptions) -> Result<Report> {
    let gen = generate_graph(k, &[k.highest()], opts)?;
    let mut rep = Report::default();
    let (last_row, last_col) = (k.a.r as u8, (k.a.n - k.a.r) as u8);
    for m in &gen.elements {
        let se = k.a.glue_se(m, k.s).and_then(|u| k.a.unglue_se(&u));
        record(&mut rep, se.as_ref().ok() == Some(m), "unglue-se", m.to_text(), 0, || format!("{se:?}"));
        let nw = k.a.glue_nw(m, k.s).and_then(|u| k.a.unglue_nw(&u));
        record(&mut rep, nw.as_ref().ok() == Some(m), "unglue-nw", m.to_text(), 0, || format!("{nw:?}"));
        let unit = |p: u8, q: u8| {
            let mut x = m.clone();
            x.set(p, q, m.get(p, q) + 1);
            x
        };
        if let Some(w) = k.lower(m, k.a.r) {
            record(&mut rep, w == unit(1, 1), "corner-nw", m.to_text(), k.a.r, || w.to_text());
        }
        if let Some(w) = k.raise(m, 0) {
            record(&mut rep, w == unit(last_row, last_col), "corner-se", m.to_text(), 0, || w.to_text());
        }
    }
    Ok(rep)
}

/// `κ̂` intertwines `ê_i`, `f̂_i` with the folded tableau rules.
pub fn transport_folded(f: &Folded, max_total: u32) -> Report {
    let mut rep = Report::default();
    for m in f.enumerate(max_total) {
        for i in f.indices() {
            for dir in [Dir::Raise, Dir::Lower] {
                let img = f.folded_op(&m, i, dir).expect("index in range");
                if i >= 1 {
                    let lhs = img.as_ref().map(|x| f.kappa_fold(x, Corner::AntiNormal));
                    let rhs = f.fold_se_op(&f.kappa_fold(&m, Corner::AntiNormal), i, dir).expect("valid");
                    record(&mut rep, lhs == rhs, "kappa-fold-se", m.to_text(), i, || format!("{dir:?}: {lhs:?} vs {rhs:?}"));
                }
                if i < f.n {
                    let lhs = img.as_ref().map(|x| f.kappa_fold(x, Corner::Normal));
                    let rhs = f.fold_nw_op(&f.kappa_fold(&m, Corner::Normal), i, dir).expect("valid");
                    record(&mut rep, lhs == rhs, "kappa-fold-nw", m.to_text(), i, || format!("{dir:?}: {lhs:?} vs {rhs:?}"));
                }
            }
        }
    }
    rep
}

/// Folded operators keep matrices symmetric with `ε`-divisible diagonal.
pub fn closure_folded(f: &Folded, max_total: u32) -> Report {
    let mut rep = Report::default();
    for m in f.enumerate(max_total) {
        for i in f.indices() {
            for dir in [Dir::Raise, Dir::Lower] {
                if let Some(x) = f.folded_op(&m, i, dir).expect("index in range") {
                    record(&mut rep, f.is_symmetric(&x), "folded-closure", m.to_text(), i, || x.to_text());
                }
            }
        }
    }
    rep
}

fn spin_graph(c: &DClass, side: SpinSide, corner: Corner, opts: GenOptions) -> Result<CrystalGraph> {
    let power = TensorPower::new(SpinCrystal::new(c.d.n, side, c.parity)?, c.s);
    let seed = c.d.spin_embed(&rectify(&c.highest(), corner), corner, c.s)?;
    Ok(generate_graph(&power, &[seed], opts)?.graph)
}

/// `ι_s` followed by `ρ` intertwines the class operators with the spin
/// tensor power, over `I_0` through `T^↘` and over `I_n` through `T^↖`;
/// both restrictions of the class graph are isomorphic to the spin
/// components.
pub fn oracle_spin(c: &DClass, opts: GenOptions) -> Result<Report> {
    let gen = generate_graph(c, &[c.highest()], opts)?;
    let n = c.d.n;
    let mut rep = Report::default();
    for (side, corner, colors) in [
        (SpinSide::Se, Corner::AntiNormal, (1..=n).collect::<Vec<_>>()),
        (SpinSide::Nw, Corner::Normal, (0..n).collect::<Vec<_>>()),
    ] {
        let power = TensorPower::new(SpinCrystal::new(n, side, c.parity)?, c.s);
        let embed = |t: &Tableau| c.d.spin_embed(&rectify(t, corner), corner, c.s);
        for t in &gen.elements {
            let v = embed(t)?;
            for &i in &colors {
                for dir in [Dir::Raise, Dir::Lower] {
                    let lhs = c.class_op(t, i, dir)?.map(|x| embed(&x)).transpose()?;
                    let rhs = power.apply(&v, i, dir);
                    record(&mut rep, lhs == rhs, "spin-transport", t.key(), i, || format!("{dir:?}: {lhs:?} vs {rhs:?}"));
                }
            }
        }
        let restricted = gen.graph.restrict(&colors);
        let spin = spin_graph(c, side, corner, opts)?;
        let iso = graph_isomorphism(&restricted, &spin);
        record(&mut rep, iso.is_ok(), "spin-isomorphism", format!("{side:?}"), 0, || iso.unwrap_err().0);
    }
    Ok(rep)
}

/// For skew tableaux `T'` inside `((s+1)^n)` whose class is in the crystal,
/// operating on `T'` and rectifying agrees with the class operator.
pub fn well_defined(c: &DClass, opts: GenOptions) -> Result<Report> {
    let gen: Generated<Tableau> = generate_graph(c, &[c.highest()], opts)?;
    let n = c.d.n;
    let mut rep = Report::default();
    for outer in Partition::rectangle(n, c.s + 1).subpartitions() {
        for inner in outer.subpartitions() {
            for t in enumerate_ssyt_skew(&outer, &inner, c.d.alphabet()) {
                let rep_t = c.canonical(&t);
                if gen.vertex_of(&rep_t).is_none() {
                    continue;
                }
                for i in 0..=n {
                    for dir in [Dir::Raise, Dir::Lower] {
                        let rhs = c.class_op(&rep_t, i, dir)?;
                        let lhs = if i == 0 || i == n {
                            c.class_op(&t, i, dir)?
                        } else {
                            t.crystal_op(i, dir).map(|x| c.canonical(&x)).filter(|x| x.width() <= c.s)
                        };
                        record(&mut rep, lhs == rhs, "well-defined", t.key(), i, || format!("{dir:?}: {lhs:?} vs {rhs:?}"));
                    }
                }
            }
        }
    }
    Ok(rep)
}
