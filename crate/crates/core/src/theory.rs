//! The classification of Schur-positivity among fat staircases whose
//! foundation is a hook, its transfer to hook complements, and the witness
//! constructions behind it, all checkable against brute-force comparison.

use serde::{Serialize, Serializer};

use crate::error::{precondition, Error, Result};
use crate::schur::{ComparisonResult, SchurCache, Verdict};
use crate::shapes::{
    complement, contains, hooks_of_size, reverse_composition, staircase_with_foundation,
    Composition, Hook, Partition, Rectangle, SkewShape,
};
use crate::tableaux::{r_set, shift_join, unique_staircase_filling, Content, Tableau};

/// Which case of the classification decided a prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Both arms are at most `⌈h/2⌉`.
    Antichain,
    /// `⌈h/2⌉ ≤ λ_a < μ_a` and `λ_a ≥ μ_l + k - 1`.
    ChainForward,
    /// `⌈h/2⌉ ≤ λ_a < μ_a` without the threshold.
    ChainConverse,
    /// `λ_a, μ_l ≤ ⌈h/2⌉` and the threshold holds (`λ_a ≥ μ_l` when `k = 0`).
    CrossForward,
    /// `λ_a, μ_l ≤ ⌈h/2⌉` without the threshold.
    CrossConverse,
    /// `k ≥ h`: every diagram is a product `s_λ s_{δ_α}`, so nothing dominates.
    KGeH,
    /// Every remaining ordered pair: no case grants domination.
    ClosedWorld,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Antichain => "antichain",
            Rule::ChainForward => "chain-forward",
            Rule::ChainConverse => "chain-converse",
            Rule::CrossForward => "cross-forward",
            Rule::CrossConverse => "cross-converse",
            Rule::KGeH => "k-ge-h",
            Rule::ClosedWorld => "closed-world",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Dominates,
    NotDominates,
}

/// The quantities the classification looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionValues {
    pub lam_arm: u32,
    pub lam_leg: u32,
    pub mu_arm: u32,
    pub mu_leg: u32,
    pub h: u32,
    pub k: u32,
    pub half: u32,
}

/// Predicted answer to "does `S(λ,α;k)` dominate `S(μ,α;k)`?".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PredictedRelation {
    pub verdict: Relation,
    pub rule: Rule,
    /// Reached through the complement transfer.
    pub via_complement: bool,
    pub conditions: ConditionValues,
}

impl PredictedRelation {
    pub fn dominates(&self) -> bool {
        self.verdict == Relation::Dominates
    }

    /// `chain-forward`, or `complement-transfer(chain-forward)`.
    pub fn rule_id(&self) -> String {
        if self.via_complement {
            format!("complement-transfer({})", self.rule.as_str())
        } else {
            self.rule.as_str().to_string()
        }
    }
}

impl Serialize for PredictedRelation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            verdict: Relation,
            rule: String,
            conditions: &'a ConditionValues,
        }
        Repr {
            verdict: self.verdict,
            rule: self.rule_id(),
            conditions: &self.conditions,
        }
        .serialize(serializer)
    }
}

/// Predicts whether `S(lam,α;k) ≽ S(mu,α;k)` for distinct hooks of size `h`,
/// where `n` is the number of parts of `α`.
pub fn predicted_relation(lam: Hook, mu: Hook, h: u32, k: u32, n: u32) -> Result<PredictedRelation> {
    if lam.size() != h || mu.size() != h {
        return Err(precondition(format!(
            "hooks {} and {} must both have size {h}",
            lam.to_partition(),
            mu.to_partition()
        )));
    }
    if lam == mu {
        return Err(precondition("the two hooks must be distinct"));
    }
    if h > n + k {
        return Err(precondition(format!("h = {h} exceeds n + k = {}", n + k)));
    }
    if k > h {
        return Err(precondition(format!("k = {k} exceeds h = {h}")));
    }
    let half = h.div_ceil(2);
    let conditions = ConditionValues {
        lam_arm: lam.arm,
        lam_leg: lam.leg,
        mu_arm: mu.arm,
        mu_leg: mu.leg,
        h,
        k,
        half,
    };
    let chain = half <= lam.arm && lam.arm < mu.arm;
    let cross = lam.arm <= half && mu.leg <= half;
    // λ_a ≥ μ_l + k - 1, kept in unsigned arithmetic
    let threshold = lam.arm + 1 >= mu.leg + k;
    let cross_threshold = if k == 0 { lam.arm >= mu.leg } else { threshold };

    let (verdict, rule) = if k >= h {
        (Relation::NotDominates, Rule::KGeH)
    } else if cross && cross_threshold {
        (Relation::Dominates, Rule::CrossForward)
    } else if chain && threshold {
        (Relation::Dominates, Rule::ChainForward)
    } else if lam.arm <= half && mu.arm <= half {
        (Relation::NotDominates, Rule::Antichain)
    } else if chain {
        (Relation::NotDominates, Rule::ChainConverse)
    } else if cross {
        (Relation::NotDominates, Rule::CrossConverse)
    } else {
        (Relation::NotDominates, Rule::ClosedWorld)
    };
    Ok(PredictedRelation {
        verdict,
        rule,
        via_complement: false,
        conditions,
    })
}

/// Overlap parameter of the reversed side of the complement transfer: the
/// reversed staircase stays right-aligned in the rectangle of width `n + k`,
/// which is `n + k - len(α^r) = 1` for both `k = 0` and `k = 1`.
fn reversed_overlap(alpha: &Composition, reversed: &Composition, k: u32) -> u32 {
    alpha.len() as u32 + k - reversed.len() as u32
}

/// Predicts whether `S(lam^c,α;k) ≽ S(mu^c,α;k)`, complements taken in a
/// rectangle of width `n + k`, by deciding the uncomplemented question for
/// the reverse composition.
pub fn predicted_relation_complement(
    lam: Hook,
    mu: Hook,
    h: u32,
    k: u32,
    alpha: &Composition,
) -> Result<PredictedRelation> {
    let reversed = reverse_composition(alpha, k)?;
    if reversed.is_empty() {
        return Err(precondition(format!("the reverse of {alpha} with k = {k} is empty")));
    }
    if h > alpha.len() as u32 + k {
        return Err(precondition(format!(
            "h = {h} exceeds n + k = {}",
            alpha.len() as u32 + k
        )));
    }
    let kr = reversed_overlap(alpha, &reversed, k);
    let mut p = predicted_relation(lam, mu, h, kr, reversed.len() as u32)?;
    p.via_complement = true;
    Ok(p)
}

/// Which first-row and first-column recipe to use for the foundation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofFilling {
    /// `k` ones, then the smallest admissible values along the first row,
    /// continuing down the first column.
    Distinct,
    /// `k` ones and admissible values along the first row ending in `|α| + 1`,
    /// then `|α| + 2, ..., |α| + leg` down the first column.
    Tall,
}

/// Witness tableau of shape `S(mu,α;k)` used to separate hook foundations,
/// together with its content.
pub fn proof_content_tableau(
    mu: Hook,
    alpha: &Composition,
    k: u32,
    variant: ProofFilling,
) -> Result<(Content, Tableau)> {
    let n = alpha.len() as u32;
    let h = mu.size();
    if h > n + k {
        return Err(precondition(format!("h = {h} exceeds n + k = {}", n + k)));
    }
    let r = r_set(alpha, k)?.sequence();
    let total = alpha.size() as u32;
    let (first_row, column): (Vec<u32>, Vec<u32>) = match variant {
        ProofFilling::Distinct => {
            if mu.arm < k {
                return Err(precondition(format!(
                    "arm {} cannot hold the {k} ones in the first row",
                    mu.arm
                )));
            }
            let arm = mu.arm as usize;
            (r[..arm].to_vec(), r[arm..h as usize].to_vec())
        }
        ProofFilling::Tall => {
            let mut row = r[..mu.arm as usize - 1].to_vec();
            row.push(total + 1);
            (row, (total + 2..=total + mu.leg).collect())
        }
    };
    let mut rows = unique_staircase_filling(alpha)?.rows().to_vec();
    rows.push(first_row);
    rows.extend(column.into_iter().map(|v| vec![v]));
    let lambda = mu.to_partition();
    let disjoint = staircase_with_foundation(&lambda, alpha, lambda.first())?;
    let t = shift_join(&Tableau::new(disjoint, rows)?, &lambda, alpha, k)?;
    Ok((crate::tableaux::content(&t), t))
}

fn binomial(n: u32, r: u32) -> Result<u64> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("computing a binomial coefficient"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountSide {
    /// Choose which admissible values go in the first row.
    Row,
    /// Choose which admissible values go down the first column.
    Column,
}

/// Predicted number of lattice fillings of `S(mu,α;k)` with the content of the
/// [`ProofFilling::Distinct`] witness: `C(h-k, μ_a-k)` counted by rows,
/// `C(h-k, μ_l-1)` counted by columns, with `k` read as 1 when `k = 0`.
pub fn binomial_count(h: u32, k: u32, mu: Hook, side: CountSide) -> Result<u64> {
    if mu.size() != h {
        return Err(precondition(format!(
            "hook {} does not have size {h}",
            mu.to_partition()
        )));
    }
    if k > h {
        return Err(precondition(format!("k = {k} exceeds h = {h}")));
    }
    let kk = k.max(1);
    match side {
        CountSide::Row => {
            if mu.arm < kk {
                return Err(precondition(format!("arm {} is smaller than k = {k}", mu.arm)));
            }
            binomial(h - kk, mu.arm - kk)
        }
        CountSide::Column => binomial(h - kk, mu.leg - 1),
    }
}

/// Builds both sides of the complement identity for a foundation `mu` of
/// height `l`: returns `S(mu,α;k)`, the reversed diagram `S(λ,α^r;1)` and the
/// rectangle `((n+k)^{|α|+l})`, where `λ` is the complement of
/// `(n+k)^{|α|} ∪ mu`. The truncated complement of the Schur function of the
/// second equals that of the first.
pub fn build_transfer_instance(
    mu: &Partition,
    alpha: &Composition,
    k: u32,
    l: u32,
) -> Result<(SkewShape, SkewShape, Rectangle)> {
    let reversed = reverse_composition(alpha, k)?;
    let w = alpha.len() as u32 + k;
    let box_rect = Rectangle::new(w, l);
    if mu.is_empty() || mu.len() != l as usize || !box_rect.fits(mu) {
        return Err(precondition(format!(
            "foundation {mu} must be nonempty with exactly {l} rows of width at most {w}"
        )));
    }
    if *mu == box_rect.to_partition() {
        return Err(precondition(format!(
            "foundation {mu} fills the whole {w}x{l} box"
        )));
    }
    let rect = Rectangle::new(w, alpha.size() as u32 + l);
    let mut rho = vec![w; alpha.size()];
    rho.extend_from_slice(mu.parts());
    let rho = Partition::new(rho)?;
    let lambda = complement(&rho, rect)?;
    let left = staircase_with_foundation(mu, alpha, k)?;
    let inner = crate::shapes::delta_fat(&reversed);
    if !contains(&inner, &rho) || SkewShape::new(rho.clone(), inner)? != left {
        return Err(precondition(format!(
            "{rho} minus the reversed staircase does not give S({mu}, {alpha}; {k})"
        )));
    }
    let right = if reversed.is_empty() {
        SkewShape::straight(lambda)
    } else {
        staircase_with_foundation(&lambda, &reversed, reversed_overlap(alpha, &reversed, k))?
    };
    Ok((left, right, rect))
}

/// The diagrams `S(λ,α;k)` for every hook `λ` of size `h`, or `S(λ^c,α;k)`
/// with `λ^c` taken in the rectangle of width `n + k` and the given height.
pub fn hook_family(
    alpha: &Composition,
    h: u32,
    k: u32,
    complement_height: Option<u32>,
) -> Result<Vec<(Hook, SkewShape)>> {
    let n = alpha.len() as u32;
    if h == 0 {
        return Err(precondition("hook size must be positive"));
    }
    if h > n + k {
        return Err(precondition(format!("h = {h} exceeds n + k = {}", n + k)));
    }
    if complement_height.is_some() && k > 1 {
        return Err(precondition(format!("complement families need k in {{0, 1}}, got {k}")));
    }
    hooks_of_size(h)
        .into_iter()
        .map(|hook| {
            let lambda = hook.to_partition();
            let foundation = match complement_height {
                None => lambda,
                Some(height) => {
                    if height < h {
                        return Err(precondition(format!(
                            "rectangle height {height} is shorter than the hook leg {}",
                            hook.leg
                        )));
                    }
                    complement(&lambda, Rectangle::new(n + k, height))?
                }
            };
            Ok((hook, staircase_with_foundation(&foundation, alpha, k)?))
        })
        .collect()
}

/// Predicted versus observed relation for one ordered pair of hooks.
#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    pub lam: Partition,
    pub mu: Partition,
    pub predicted: PredictedRelation,
    pub observed: ComparisonResult,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub alpha: Composition,
    pub h: u32,
    pub k: u32,
    pub complement_rect: Option<Rectangle>,
    pub pairs: Vec<PairRecord>,
    pub mismatches: Vec<(Partition, Partition)>,
}

impl FamilyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Ordered pairs `(λ, μ)` observed with `S(λ) ≽ S(μ)` strictly.
    pub fn observed_dominations(&self) -> Vec<(Partition, Partition)> {
        self.pairs
            .iter()
            .filter(|p| p.observed.verdict == Verdict::FirstDominates)
            .map(|p| (p.lam.clone(), p.mu.clone()))
            .collect()
    }
}

/// Compares every ordered pair of distinct diagrams in a hook (or hook
/// complement) family against the predicted classification.
pub fn verify_hook_family(
    alpha: &Composition,
    h: u32,
    k: u32,
    complement_height: Option<u32>,
    cache: &SchurCache,
) -> Result<FamilyReport> {
    let family = hook_family(alpha, h, k, complement_height)?;
    let shapes: Vec<SkewShape> = family.iter().map(|(_, d)| d.clone()).collect();
    cache.expand_all(&shapes)?;
    let n = alpha.len() as u32;
    let mut pairs = Vec::new();
    let mut mismatches = Vec::new();
    for (lam, d1) in &family {
        for (mu, d2) in &family {
            if lam == mu {
                continue;
            }
            let predicted = match complement_height {
                None => predicted_relation(*lam, *mu, h, k, n)?,
                Some(_) => predicted_relation_complement(*lam, *mu, h, k, alpha)?,
            };
            let observed = cache.compare(d1, d2)?;
            let matches = predicted.dominates() == observed.verdict.first_dominates();
            let (lp, mp) = (lam.to_partition(), mu.to_partition());
            if !matches {
                mismatches.push((lp.clone(), mp.clone()));
            }
            pairs.push(PairRecord {
                lam: lp,
                mu: mp,
                predicted,
                observed,
                matches,
            });
        }
    }
    Ok(FamilyReport {
        alpha: alpha.clone(),
        h,
        k,
        complement_rect: complement_height.map(|height| Rectangle::new(n + k, height)),
        pairs,
        mismatches,
    })
}
