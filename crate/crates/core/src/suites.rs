//! Deterministic property suites over fixed windows, shared by the test
//! targets and `verify`.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::engine::{Deduction, Engine, Outcome};
use crate::jantzen::certified_weights;
use crate::lattice::{act, form, positive_odd_roots, weyl_elements, AlgebraShape, Weight};
use crate::linkage::{block_id, bruhat_leq, degree};
use crate::reps::{rep_dim, rep_weights, RepKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn fail(&mut self, msg: String) {
        // keep reports readable when something is badly off
        if self.failures.len() < 50 {
            self.failures.push(msg);
        }
    }
}

/// Every weight with all coordinates in `[lo, hi]`.
pub fn box_weights(shape: AlgebraShape, lo: i64, hi: i64) -> Vec<Weight> {
    let len = shape.m() + shape.n();
    let mut out = Vec::new();
    let mut cur = vec![lo; len];
    loop {
        out.push(Weight::from_flat(shape, &cur).expect("shape-sized vector"));
        let mut i = 0;
        while i < len && cur[i] == hi {
            cur[i] = lo;
            i += 1;
        }
        if i == len {
            return out;
        }
        cur[i] += 1;
    }
}

/// Block classifier against connected components of the linkage graph
/// (Weyl moves and orthogonal isotropic shifts) on a padded box.
pub fn linkage_vs_oracle(shape: AlgebraShape, lo: i64, hi: i64, pad: i64) -> SuiteReport {
    let mut rep = SuiteReport::new(&format!("linkage {shape} on [{lo},{hi}]"));
    let nodes = box_weights(shape, lo - pad, hi + pad);
    let index: HashMap<&Weight, usize> = nodes.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::<usize>::new(nodes.len());
    let group = weyl_elements(shape);
    let odd: Vec<Weight> = positive_odd_roots(shape)
        .iter()
        .map(|r| r.vector())
        .collect();
    for (i, w) in nodes.iter().enumerate() {
        for g in &group {
            if let Some(&j) = index.get(&act(g, w)) {
                uf.union(i, j);
            }
        }
        for beta in &odd {
            if form(w, beta).expect("same shape") == 0 {
                for moved in [w + beta, w - beta] {
                    if let Some(&j) = index.get(&moved) {
                        uf.union(i, j);
                    }
                }
            }
        }
    }
    let inner: Vec<&Weight> = nodes
        .iter()
        .filter(|w| w.coords().all(|x| (lo..=hi).contains(&x)))
        .collect();
    let ids: Vec<_> = inner.iter().map(|w| block_id(w)).collect();
    for a in 0..inner.len() {
        for b in a..inner.len() {
            rep.checked += 1;
            let oracle = uf.equiv(index[inner[a]], index[inner[b]]);
            if oracle != (ids[a] == ids[b]) {
                rep.fail(format!("{} ~ {}: oracle {oracle}", inner[a], inner[b]));
            }
        }
    }
    rep
}

fn check_deduction(rep: &mut SuiteReport, d: &Deduction) {
    let lam = &d.lam;
    if d.flag.mult(lam) != 1 {
        rep.fail(format!("{lam}: head multiplicity {}", d.flag.mult(lam)));
    }
    for w in d.flag.weights() {
        if !bruhat_leq(lam, w).unwrap_or(false) {
            rep.fail(format!("{lam}: {w} is not above the head"));
        }
    }
    let cert = certified_weights(lam).flag();
    if !cert.is_subflag_of(&d.flag) {
        rep.fail(format!("{lam}: certified {} not in flag {}", cert, d.flag));
    }
    for step in &d.trace {
        if !d.flag.is_subflag_of(&step.projection) {
            rep.fail(format!(
                "{lam}: flag exceeds projection from {} ⊗ {}",
                step.mu, step.rep
            ));
        }
        if let Some(inner) = &step.intermediate {
            check_deduction(rep, inner);
        }
    }
}

/// Head, Bruhat and sandwich invariants of engine output for every weight of
/// the given degree in a box.
pub fn flag_invariants(shape: AlgebraShape, deg: usize, lo: i64, hi: i64) -> SuiteReport {
    let mut rep = SuiteReport::new(&format!("flags {shape} degree {deg} on [{lo},{hi}]"));
    let engine = Engine::new();
    for lam in box_weights(shape, lo, hi)
        .into_iter()
        .filter(|w| degree(w) == deg)
    {
        rep.checked += 1;
        match engine.deduce(&lam) {
            Ok(Outcome::Closed(d)) => check_deduction(&mut rep, &d),
            Ok(Outcome::Ambiguous(a)) => rep.fail(format!("{lam}: ambiguous, lower {}", a.lower)),
            Err(e) => rep.fail(format!("{lam}: {e}")),
        }
    }
    rep
}

/// Reads `δ1 + 2ε`, `-δ1 - δ2` and the like.
pub fn parse_weight_expr(shape: AlgebraShape, s: &str) -> Option<Weight> {
    let mut out = shape.zero();
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = cleaned.as_str();
    while !rest.is_empty() {
        let sign = if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            -1
        } else {
            rest = rest.strip_prefix('+').unwrap_or(rest);
            1
        };
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        rest = &rest[digits.len()..];
        let k: i64 = if digits.is_empty() {
            1
        } else {
            digits.parse().ok()?
        };
        let sym = rest.chars().next()?;
        rest = &rest[sym.len_utf8()..];
        let idx: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        rest = &rest[idx.len()..];
        let i: usize = if idx.is_empty() { 1 } else { idx.parse().ok()? };
        let unit = match sym {
            'δ' if (1..=shape.m()).contains(&i) => Weight::delta(shape, i - 1),
            'ε' if (1..=shape.n()).contains(&i) => Weight::epsilon(shape, i - 1),
            _ => return None,
        };
        out = &out + &unit.scaled(sign * k);
    }
    Some(out)
}

/// Reference weight lists for the representations used in the deductions.
pub const REFERENCE_WEIGHTS: &[(&str, &str, &[&str])] = &[
    ("3x1", "V", &["δ1", "δ2", "δ3", "ε"]),
    ("3x1", "V*", &["-δ1", "-δ2", "-δ3", "-ε"]),
    (
        "3x1",
        "L2V",
        &[
            "δ1 + δ2",
            "δ2 + δ3",
            "δ1 + δ3",
            "δ1 + ε",
            "δ2 + ε",
            "δ3 + ε",
            "2ε",
        ],
    ),
    (
        "3x1",
        "L3V",
        &[
            "δ1 + δ2 + δ3",
            "δ1 + δ2 + ε",
            "δ2 + δ3 + ε",
            "δ1 + δ3 + ε",
            "δ1 + 2ε",
            "δ2 + 2ε",
            "δ3 + 2ε",
            "3ε",
        ],
    ),
    (
        "3x1",
        "L2V*",
        &[
            "-δ1 - δ2",
            "-δ2 - δ3",
            "-δ1 - δ3",
            "-δ1 - ε",
            "-δ2 - ε",
            "-δ3 - ε",
            "-2ε",
        ],
    ),
    ("2x2", "V*", &["-δ1", "-δ2", "-ε1", "-ε2"]),
    (
        "2x2",
        "L2V",
        &[
            "δ1 + δ2",
            "δ1 + ε1",
            "δ1 + ε2",
            "δ2 + ε1",
            "δ2 + ε2",
            "2ε1",
            "ε1 + ε2",
            "2ε2",
        ],
    ),
    (
        "2x2",
        "L2V*",
        &[
            "-δ1 - δ2",
            "-δ1 - ε1",
            "-δ1 - ε2",
            "-δ2 - ε1",
            "-δ2 - ε2",
            "-2ε1",
            "-ε1 - ε2",
            "-2ε2",
        ],
    ),
    (
        "2x2",
        "L3V",
        &[
            "δ1 + δ2 + ε1",
            "δ1 + δ2 + ε2",
            "δ1 + 2ε1",
            "δ1 + ε1 + ε2",
            "δ1 + 2ε2",
            "δ2 + 2ε1",
            "δ2 + ε1 + ε2",
            "δ2 + 2ε2",
            "3ε1",
            "2ε1 + ε2",
            "ε1 + 2ε2",
            "3ε2",
        ],
    ),
];

/// Weight counts against the dimension formula for every shape up to
/// gl(3|3), and the reference lists as multisets.
pub fn rep_weight_lists() -> SuiteReport {
    let mut rep = SuiteReport::new("exterior power weights");
    for m in 1..=3 {
        for n in 1..=3 {
            let shape = AlgebraShape::new(m, n).expect("small shape");
            for kind in RepKind::SEARCH_ORDER {
                rep.checked += 1;
                let got = rep_weights(shape, kind).total();
                let want = rep_dim(shape, kind);
                if got != want {
                    rep.fail(format!("{shape} {kind}: {got} weights, dimension {want}"));
                }
            }
        }
    }
    for (alg, kind, list) in REFERENCE_WEIGHTS {
        rep.checked += 1;
        let shape: AlgebraShape = alg.parse().expect("listed shape");
        let kind: RepKind = kind.parse().expect("listed rep");
        let mut want: Vec<Weight> = list
            .iter()
            .map(|s| parse_weight_expr(shape, s).expect("listed weight"))
            .collect();
        want.sort();
        let mut got: Vec<Weight> = rep_weights(shape, kind)
            .entries()
            .iter()
            .flat_map(|(w, k)| std::iter::repeat_n(w.clone(), *k as usize))
            .collect();
        got.sort();
        if got != want {
            rep.fail(format!(
                "{shape} {kind}: generated list differs from reference"
            ));
        }
    }
    rep
}

/// Degree, block and form are unchanged by every Weyl group element.
pub fn weyl_invariance(samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new(&format!("Weyl invariance on {samples} weights"));
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let shape = if rng.gen_bool(0.5) {
            AlgebraShape::GL31
        } else {
            AlgebraShape::GL22
        };
        let flat: Vec<i64> = (0..shape.m() + shape.n())
            .map(|_| rng.gen_range(-4..=4))
            .collect();
        let lam = Weight::from_flat(shape, &flat).expect("shape-sized vector");
        let other: Vec<i64> = (0..flat.len()).map(|_| rng.gen_range(-4..=4)).collect();
        let other = Weight::from_flat(shape, &other).expect("shape-sized vector");
        rep.checked += 1;
        let id = block_id(&lam);
        let f = form(&lam, &other).expect("same shape");
        for g in weyl_elements(shape) {
            let moved = act(&g, &lam);
            if degree(&moved) != id.degree || block_id(&moved) != id {
                rep.fail(format!("{lam} vs {moved}: block changed"));
            }
            if form(&moved, &act(&g, &other)).expect("same shape") != f {
                rep.fail(format!("{lam}: form not invariant"));
            }
        }
    }
    rep
}

/// All suites with the windows used by `verify`.
pub fn property_suites() -> Vec<SuiteReport> {
    vec![
        linkage_vs_oracle(AlgebraShape::GL31, 0, 3, 3),
        linkage_vs_oracle(AlgebraShape::GL22, 0, 3, 3),
        flag_invariants(AlgebraShape::GL31, 1, -1, 2),
        flag_invariants(AlgebraShape::GL22, 2, -1, 2),
        rep_weight_lists(),
        weyl_invariance(1000, 0x5eed),
    ]
}
