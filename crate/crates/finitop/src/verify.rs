//! The bundled verification suite: every construction in the library
//! checked against exhaustive small instances and seeded random ones,
//! one row per claim.

use crate::catalog;
use crate::ideal::{count_ideals, enumerate_ideals};
use crate::mahavier::{
    closed_subspace_check, enumerate_product, enumerate_product_brute, h_map,
    homeomorphism_theorem, quotient_invariance,
};
use crate::order::Poset;
use crate::relation::gamma_scan;
use crate::topology::{is_continuous_pots, pots_subbasis, pots_topology, MinNbhds};

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_ideals: u64,
    pub max_opens: usize,
    pub max_product: u64,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            max_ideals: crate::ideal::DEFAULT_MAX_IDEALS,
            max_opens: crate::topology::DEFAULT_MAX_OPENS,
            max_product: crate::mahavier::DEFAULT_MAX_PRODUCT,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckRow {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckRow {
    fn new(name: &'static str, passed: bool, detail: String) -> CheckRow {
        CheckRow { name, passed, detail }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub seed: u64,
    pub rows: Vec<CheckRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn render(&self) -> String {
        let mut out = format!("verification suite (seed {})\n", self.seed);
        for row in &self.rows {
            let mark = if row.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{} {} — {}\n", mark, row.name, row.detail));
        }
        let ok = self.rows.iter().filter(|r| r.passed).count();
        out.push_str(&format!("result: {}/{} passed\n", ok, self.rows.len()));
        out
    }
}

/// Runs every check, including the self-check that a second run with
/// the same seed renders byte-identically.
pub fn run_suite(seed: u64, caps: &Caps) -> SuiteReport {
    let rows = run_rows(seed, caps);
    let again = run_rows(seed, caps);
    let first = SuiteReport { seed, rows };
    let second = SuiteReport { seed, rows: again };
    let deterministic = first.render() == second.render();
    let mut rows = first.rows;
    rows.push(CheckRow::new(
        "determinism",
        deterministic,
        "two runs with the same seed render byte-identically".to_string(),
    ));
    SuiteReport { seed, rows }
}

fn run_rows(seed: u64, caps: &Caps) -> Vec<CheckRow> {
    vec![
        check_ideal_counts(caps),
        check_downset_bijection(seed, caps),
        check_pots_continuity(seed, caps),
        check_basis_bound(seed, caps),
        check_quotient_invariance(seed, caps),
        check_gamma_condition(),
        check_example8_truncations(caps),
        check_closed_subspace(caps),
        check_oracle_equivalence(seed, caps),
    ]
}

/// Chain and antichain counts in closed form, the grid, and the
/// three-atom inclusion order.
pub fn check_ideal_counts(caps: &Caps) -> CheckRow {
    let mut passed = true;
    for n in 0..=10 {
        let chain = Poset::chain(n);
        passed &= count_ideals(&chain).is_ok_and(|c| c == n as u64 + 1);
        passed &= enumerate_ideals(&chain, caps.max_ideals)
            .is_ok_and(|f| f.len() == n + 1);
    }
    for n in 1..=15 {
        let anti = Poset::antichain(n);
        passed &= count_ideals(&anti).is_ok_and(|c| c == 1 << n);
        passed &= enumerate_ideals(&anti, caps.max_ideals)
            .is_ok_and(|f| f.len() == 1 << n);
    }
    let grid = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    passed &= count_ideals(&grid).is_ok_and(|c| c == 6)
        && enumerate_ideals(&grid, caps.max_ideals).unwrap().len() == 6;
    let b3 = catalog::boolean_poset(3);
    passed &= count_ideals(&b3).is_ok_and(|c| c == 20)
        && enumerate_ideals(&b3, caps.max_ideals).unwrap().len() == 20;
    CheckRow::new(
        "ideal-counts",
        passed,
        "chains n≤10 give n+1, antichains n≤15 give 2^n, grid gives 6, boolean-3 gives 20"
            .to_string(),
    )
}

fn bijection_posets(seed: u64) -> Vec<Poset> {
    let mut posets: Vec<Poset> = catalog::small_posets().into_iter().map(|(_, p)| p).collect();
    let mut rng = catalog::rng(seed);
    for i in 0..50 {
        posets.push(catalog::random_poset(4 + i % 2, &mut rng));
    }
    posets
}

/// Cardinality, bijection, and three-way topology agreement between an
/// ideal family and its characteristic-vector product.
pub fn check_downset_bijection(seed: u64, caps: &Caps) -> CheckRow {
    let posets = bijection_posets(seed);
    let total = posets.len();
    let mut passed = true;
    for poset in &posets {
        let family = match enumerate_ideals(poset, caps.max_ideals) {
            Ok(f) => f,
            Err(_) => {
                passed = false;
                continue;
            }
        };
        let count = count_ideals(poset).unwrap_or(0);
        let product = enumerate_product(
            2,
            &crate::relation::SetRelation::gamma(2, 0, 1).unwrap(),
            poset.as_preorder(),
            caps.max_product,
        );
        passed &= product.is_ok_and(|m| m.len() as u64 == count);
        passed &= h_map(&family, caps.max_product).is_ok_and(|h| h.bijective);
        passed &= homeomorphism_theorem(poset, caps.max_ideals, caps.max_opens)
            .is_ok_and(|t| t.equal());
    }
    CheckRow::new(
        "downset-bijection",
        passed,
        format!(
            "{} posets (catalog to size 4 plus 50 random of size 4-5): |M(2,γ,P)| matches the ideal count, the characteristic map is a bijection, and all three topologies agree",
            total
        ),
    )
}

/// Downset spaces are continuous by all three conditions, and the three
/// verdicts agree on arbitrary ordered spaces.
pub fn check_pots_continuity(seed: u64, caps: &Caps) -> CheckRow {
    let mut passed = true;
    for (_, poset) in catalog::small_posets() {
        let verdict = enumerate_ideals(&poset, caps.max_ideals)
            .and_then(|family| family.containment_poset())
            .and_then(|cp| pots_topology(&cp, caps.max_opens))
            .map(|space| is_continuous_pots(&space));
        passed &= verdict.is_ok_and(|r| r.all() && r.agree());
    }
    let mut rng = catalog::rng(seed);
    let mut agreements = 0;
    for i in 0..200 {
        let s = catalog::random_ordered_space(1 + i % 5, &mut rng);
        let report = is_continuous_pots(&s);
        if report.agree() {
            agreements += 1;
        } else {
            passed = false;
        }
    }
    CheckRow::new(
        "pots-continuity",
        passed,
        format!(
            "downset spaces of all catalog posets pass all three conditions; verdicts agree on {}/200 random ordered spaces",
            agreements
        ),
    )
}

/// The principal-ideal points have pairwise distinct minimal
/// neighborhoods in the downset space, so the minimal basis has at
/// least as many members as the poset.
pub fn check_basis_bound(seed: u64, caps: &Caps) -> CheckRow {
    let mut posets: Vec<Poset> = catalog::small_posets().into_iter().map(|(_, p)| p).collect();
    let mut rng = catalog::rng(seed);
    for _ in 0..50 {
        posets.push(catalog::random_poset(5, &mut rng));
    }
    let total = posets.len();
    let mut passed = true;
    for poset in &posets {
        let family = match enumerate_ideals(poset, caps.max_ideals) {
            Ok(f) => f,
            Err(_) => {
                passed = false;
                continue;
            }
        };
        let containment = match family.containment_poset() {
            Ok(cp) => cp,
            Err(_) => {
                passed = false;
                continue;
            }
        };
        let nb = MinNbhds::from_subbasis(family.len(), &pots_subbasis(&containment));
        let mut seen = Vec::new();
        for p in 0..poset.n() {
            let position = family
                .index_of(family.principal_ideal(p).unwrap())
                .expect("principal ideals are in the family");
            let nbhd = nb.nbhd(position);
            if seen.contains(&nbhd) {
                passed = false;
            }
            seen.push(nbhd);
        }
        passed &= nb.minimal_basis().len() >= poset.n();
    }
    CheckRow::new(
        "basis-lower-bound",
        passed,
        format!(
            "{} posets (catalog plus 50 random of size 5): principal-ideal neighborhoods are pairwise distinct, so the minimal basis has at least |P| members (the finite content of the basis-size bound)",
            total
        ),
    )
}

/// Condensing the index preorder leaves the two-point constraint
/// product unchanged up to homeomorphism.
pub fn check_quotient_invariance(seed: u64, caps: &Caps) -> CheckRow {
    let mut rng = catalog::rng(seed);
    let mut nontrivial = 0;
    let mut passed = true;
    for i in 0..200 {
        let q = catalog::random_preorder(1 + i % 5, &mut rng);
        if q.quotient().classes.iter().any(|c| c.len() > 1) {
            nontrivial += 1;
        }
        passed &= quotient_invariance(&q, caps.max_product).is_ok_and(|r| r.holds());
    }
    passed &= nontrivial >= 20;
    CheckRow::new(
        "quotient-invariance",
        passed,
        format!(
            "200 random preorders of size ≤5 ({} with merged classes): the induced map is a well-defined homeomorphism",
            nontrivial
        ),
    )
}

/// Exhaustive scan: every V-relation other than the identity on a
/// discrete 2- or 3-point space has the Γ configuration.
pub fn check_gamma_condition() -> CheckRow {
    let r2 = gamma_scan(2);
    let r3 = gamma_scan(3);
    let passed = match (&r2, &r3) {
        (Ok(a), Ok(b)) => {
            a.relations_scanned == 16
                && b.relations_scanned == 512
                && a.counterexample.is_none()
                && b.counterexample.is_none()
        }
        _ => false,
    };
    let detail = match (r2, r3) {
        (Ok(a), Ok(b)) => format!(
            "16 relations on 2 points ({} V-relations) and 512 on 3 points ({} V-relations): no violation",
            a.v_relations_checked, b.v_relations_checked
        ),
        _ => "scan failed".to_string(),
    };
    CheckRow::new("gamma-condition", passed, detail)
}

/// Stated expectation: the cone topologies of the two- and three-atom
/// inclusion orders are T1 but not Hausdorff. On finite posets the cone
/// subbasis isolates every point, so the spaces come out discrete and
/// the expectation fails; the row reports the actual separation.
pub fn check_example8_truncations(caps: &Caps) -> CheckRow {
    let mut passed = true;
    let mut details = Vec::new();
    for atoms in [2, 3] {
        let poset = catalog::boolean_poset(atoms);
        match pots_topology(&poset, caps.max_opens) {
            Ok(space) => {
                let report = space.space.separation();
                passed &= report.t1 && !report.hausdorff;
                details.push(format!(
                    "{} atoms: t1={} hausdorff={} witness={:?}",
                    atoms, report.t1, report.hausdorff, report.witness
                ));
            }
            Err(_) => {
                passed = false;
                details.push(format!("{} atoms: construction failed", atoms));
            }
        }
    }
    CheckRow::new(
        "example8-truncations",
        passed,
        format!("expected T1 and not Hausdorff; got {}", details.join("; ")),
    )
}

/// The image of the constraint product is closed in the ambient power.
pub fn check_closed_subspace(caps: &Caps) -> CheckRow {
    let mut passed = true;
    let mut checked = 0;
    for (_, poset) in catalog::small_posets() {
        if poset.n() <= 4 {
            checked += 1;
            passed &= closed_subspace_check(&poset, caps.max_opens).unwrap_or(false);
        }
    }
    CheckRow::new(
        "closed-subspace",
        passed,
        format!("{} catalog posets of size ≤4: the product image is closed in the power space", checked),
    )
}

/// Backtracking enumeration agrees with the brute-force filter.
pub fn check_oracle_equivalence(seed: u64, caps: &Caps) -> CheckRow {
    let mut rng = catalog::rng(seed);
    let mut passed = true;
    for i in 0..100 {
        let x_size = 1 + i % 3;
        let q = catalog::random_preorder(i % 5, &mut rng);
        let f = catalog::random_relation(x_size, &mut rng);
        let fast = enumerate_product(x_size, &f, &q, caps.max_product);
        let brute = enumerate_product_brute(x_size, &f, &q, caps.max_product);
        passed &= match (fast, brute) {
            (Ok(a), Ok(b)) => a.elements() == b.as_slice(),
            _ => false,
        };
    }
    CheckRow::new(
        "oracle-equivalence",
        passed,
        "100 random (X ≤ 3, |Q| ≤ 4) instances: backtracking equals the brute-force filter"
            .to_string(),
    )
}
