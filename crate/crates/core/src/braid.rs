//! Braid words, the Artin action on the free group, and Fox calculus for the
//! closure of a braid together with its axis.
//!
//! The complement of `closure(β) ∪ axis` is the mapping torus of the
//! punctured disk, with fundamental group
//! `⟨x_1, …, x_n, a | a^{-1} x_i a = β(x_i)⟩`. The Fox Jacobian of these `n`
//! relations, abelianized so that `x_i` goes to the variable of the
//! component through strand `i` and `a` to the axis variable, has maximal
//! minors `M_j = ±unit · Δ · (g_j - 1)` where `g_j` is the image of the
//! deleted generator.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::alexander::{delta_lmp, link_ring, linking_numbers, FamilyParams};
use crate::error::{Error, Result};
use crate::laurent::{Ctx, LaurentPoly, VarContext};

/// A word in the Artin generators `σ_1, …, σ_{n-1}`. Letter `i > 0` is
/// `σ_i`, letter `-i` is `σ_i^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::BraidParse("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            let i = l.unsigned_abs() as usize;
            if i == 0 || i >= strands {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    max: strands - 1,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace-separated signed generator indices.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::BraidParse(format!("`{tok}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Self {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(k),
        }
    }

    /// `end[s]`: bottom position of the strand starting at position `s`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut end = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            end[s] = pos;
        }
        end
    }

    /// Cycles of the closure, each sorted, ordered by smallest strand.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        cycles_of(&self.permutation())
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            cyc.push(k);
            k = perm[k];
        }
        cyc.sort_unstable();
        out.push(cyc);
    }
    out
}

/// Reduced word in a free group; letters are `(generator, ±1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeGroupWord {
    letters: Vec<(usize, i8)>,
}

impl FreeGroupWord {
    pub fn generator(g: usize) -> Self {
        FreeGroupWord { letters: vec![(g, 1)] }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i8)>) -> Self {
        let mut w = FreeGroupWord::default();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, (g, e): (usize, i8)) {
        debug_assert!(e == 1 || e == -1);
        if self.letters.last() == Some(&(g, -e)) {
            self.letters.pop();
        } else {
            self.letters.push((g, e));
        }
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Exponent sum per generator.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for &(g, e) in &self.letters {
            v[g] += e as i64;
        }
        v
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| {
                if e > 0 {
                    format!("x{}", g + 1)
                } else {
                    format!("x{}^-1", g + 1)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Images of all free generators under the braid automorphism.
///
/// `σ_i` sends `x_i ↦ x_i x_{i+1} x_i^{-1}`, `x_{i+1} ↦ x_i`; a word acts by
/// `φ_{wσ} = φ_w ∘ φ_σ`. Generators are 0-based here.
pub fn artin_images(b: &BraidWord) -> Vec<FreeGroupWord> {
    let mut img: Vec<FreeGroupWord> = (0..b.strands).map(FreeGroupWord::generator).collect();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        let (xi, xj) = (img[i].clone(), img[i + 1].clone());
        if l > 0 {
            img[i] = xi.mul(&xj).mul(&xi.inverse());
            img[i + 1] = xi;
        } else {
            // σ_i^{-1}: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
            img[i + 1] = xj.inverse().mul(&xi).mul(&xj);
            img[i] = xj;
        }
    }
    img
}

/// Image of generator `gen` (1-based) under the braid automorphism.
pub fn artin_image(b: &BraidWord, gen: usize) -> Result<FreeGroupWord> {
    if gen == 0 || gen > b.strands {
        return Err(Error::IndexOutOfRange {
            index: gen,
            max: b.strands,
        });
    }
    Ok(artin_images(b).swap_remove(gen - 1))
}

/// Assignment of link components (cycles of the closure) to variables, plus
/// the axis variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentColoring {
    pub axis: String,
    /// Variable name per component, in ring order after the axis.
    pub names: Vec<String>,
    /// Component index of every strand.
    pub strand_component: Vec<usize>,
}

impl ComponentColoring {
    /// Names the cycles of `b` in order of their smallest strand.
    pub fn new(b: &BraidWord, axis: &str, names: &[&str]) -> Result<Self> {
        let reps: Vec<(usize, &str)> = b.cycles().iter().map(|c| c[0]).zip(names.iter().copied()).collect();
        if reps.len() != names.len() || names.len() != b.cycles().len() {
            return Err(Error::InvalidColoring(format!(
                "{} names for {} components",
                names.len(),
                b.cycles().len()
            )));
        }
        Self::by_strand(b, axis, &reps)
    }

    /// Names the cycle through each listed strand; variables follow list order.
    pub fn by_strand(b: &BraidWord, axis: &str, assignment: &[(usize, &str)]) -> Result<Self> {
        let cycles = b.cycles();
        let mut strand_component = vec![usize::MAX; b.strands];
        for (k, &(strand, _)) in assignment.iter().enumerate() {
            let cyc = cycles
                .iter()
                .find(|c| c.contains(&strand))
                .ok_or_else(|| Error::InvalidColoring(format!("strand {strand} out of range")))?;
            for &s in cyc {
                if strand_component[s] != usize::MAX {
                    return Err(Error::InvalidColoring(format!(
                        "component through strand {s} named twice"
                    )));
                }
                strand_component[s] = k;
            }
        }
        if strand_component.contains(&usize::MAX) {
            return Err(Error::InvalidColoring("every component needs a name".into()));
        }

        // the algebraic permutation of the Artin action has the same cycles
        let n = b.strands;
        let images = artin_images(b);
        let mut alg = vec![0; n];
        for (k, w) in images.iter().enumerate() {
            let sums = w.exponent_sums(n);
            alg[k] = sums
                .iter()
                .position(|&e| e == 1)
                .expect("image of a generator is a conjugate");
        }
        let mut geo = cycles.clone();
        let mut algc = cycles_of(&alg);
        geo.sort();
        algc.sort();
        if geo != algc {
            return Err(Error::InvalidColoring(
                "Artin action disagrees with the strand permutation".into(),
            ));
        }

        let names: Vec<String> = assignment.iter().map(|(_, n)| n.to_string()).collect();
        VarContext::new(std::iter::once(axis.to_string()).chain(names.iter().cloned()))?;
        Ok(ComponentColoring {
            axis: axis.to_string(),
            names,
            strand_component,
        })
    }

    /// Ring `Z[axis^±1, names^±1]`.
    pub fn ring(&self) -> Ctx {
        VarContext::new(std::iter::once(self.axis.clone()).chain(self.names.iter().cloned())).unwrap()
    }

    pub fn components(&self) -> usize {
        self.names.len()
    }
}

/// Fox Jacobian rows: one per relation `a^{-1} x_i a β(x_i)^{-1}`, columns
/// `x_1, …, x_n, a`, entries in the abelianized ring.
pub fn fox_matrix(b: &BraidWord, coloring: &ComponentColoring) -> Vec<Vec<LaurentPoly>> {
    let n = b.strands;
    let ctx = coloring.ring();
    let vars = ctx.len();
    // abelianization of generator g (g = n is the axis)
    let ab = |g: usize| -> Vec<i64> {
        let mut e = vec![0; vars];
        if g == n {
            e[0] = 1;
        } else {
            e[1 + coloring.strand_component[g]] = 1;
        }
        e
    };
    let images = artin_images(b);
    let mut rows = Vec::with_capacity(n);
    for (i, img) in images.iter().enumerate() {
        let mut rel = vec![(n, -1i8), (i, 1), (n, 1)];
        rel.extend(img.inverse().letters().iter().copied());

        let mut cols: Vec<BTreeMap<Vec<i64>, i64>> = vec![BTreeMap::new(); n + 1];
        let mut prefix = vec![0i64; vars];
        for (g, e) in rel {
            let a = ab(g);
            if e > 0 {
                *cols[g].entry(prefix.clone()).or_default() += 1;
                prefix.iter_mut().zip(&a).for_each(|(p, d)| *p += d);
            } else {
                prefix.iter_mut().zip(&a).for_each(|(p, d)| *p -= d);
                *cols[g].entry(prefix.clone()).or_default() -= 1;
            }
        }
        let row = cols
            .into_iter()
            .map(|c| LaurentPoly::from_terms(&ctx, c.into_iter().map(|(e, k)| (e, BigInt::from(k)))).unwrap())
            .collect();
        rows.push(row);
    }
    rows
}

/// Determinant over the Laurent ring by fraction-free elimination.
///
/// Pivots are chosen with the fewest terms, which keeps intermediate
/// entries small for the sparse Fox Jacobians.
pub fn laurent_det(mut a: Vec<Vec<LaurentPoly>>, ctx: &Ctx) -> Result<LaurentPoly> {
    let n = a.len();
    if n == 0 {
        return Ok(LaurentPoly::one(ctx));
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one(ctx);
    for k in 0..n - 1 {
        let pivot = (k..n)
            .flat_map(|i| (k..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].len());
        let Some((pi, pj)) = pivot else {
            return Ok(LaurentPoly::zero(ctx));
        };
        if pi != k {
            a.swap(k, pi);
            negate = !negate;
        }
        if pj != k {
            a.iter_mut().for_each(|row| row.swap(k, pj));
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let mut v = &a[i][j] * &a[k][k];
                if !a[i][k].is_zero() && !a[k][j].is_zero() {
                    v = &v - &(&a[i][k] * &a[k][j]);
                }
                a[i][j] = v.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoxResult {
    /// Canonical representative (see `LaurentPoly::normalize_unit`).
    pub delta: LaurentPoly,
    /// `M_j / (g_j - 1)` for every deleted column `j`, before normalization.
    pub quotients: Vec<LaurentPoly>,
}

/// Multivariable Alexander polynomial of `closure(b) ∪ axis`, up to units.
///
/// Every maximal minor of the Fox Jacobian is divided by `g_j - 1`; all the
/// quotients must agree up to a unit.
pub fn fox_alexander(b: &BraidWord, coloring: &ComponentColoring) -> Result<FoxResult> {
    let n = b.strands;
    let ctx = coloring.ring();
    let jac = fox_matrix(b, coloring);
    let mut quotients = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let minor: Vec<Vec<LaurentPoly>> = jac
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let m = laurent_det(minor, &ctx)?;
        let mut g = vec![0; ctx.len()];
        if j == n {
            g[0] = 1;
        } else {
            g[1 + coloring.strand_component[j]] = 1;
        }
        let g1 = &LaurentPoly::monomial(&ctx, g, 1) - &LaurentPoly::one(&ctx);
        quotients.push(m.div_exact(&g1)?);
    }
    for (j, q) in quotients.iter().enumerate().skip(1) {
        if quotients[0].unit_equivalent(q)?.is_none() {
            return Err(Error::InconsistentMinors(format!(
                "deleting column 1 gives {} but column {} gives {q}",
                quotients[0],
                j + 1
            )));
        }
    }
    let delta = if quotients[0].is_zero() {
        quotients[0].clone()
    } else {
        quotients[0].normalize_unit()?.0
    };
    Ok(FoxResult { delta, quotients })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingEntry {
    pub first: String,
    pub second: String,
    pub lk: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingReport {
    pub entries: Vec<LinkingEntry>,
}

impl LinkingReport {
    pub fn get(&self, a: &str, b: &str) -> Option<i64> {
        self.entries
            .iter()
            .find(|e| (e.first == a && e.second == b) || (e.first == b && e.second == a))
            .map(|e| e.lk)
    }
}

/// Pairwise linking numbers of `closure(b) ∪ axis`.
pub fn linking_report(b: &BraidWord, coloring: &ComponentColoring) -> LinkingReport {
    let k = coloring.components();
    let mut entries = Vec::new();
    for c in 0..k {
        let strands = coloring.strand_component.iter().filter(|&&x| x == c).count();
        entries.push(LinkingEntry {
            first: coloring.axis.clone(),
            second: coloring.names[c].clone(),
            lk: strands as i64,
        });
    }
    let mut signed = vec![vec![0i64; k]; k];
    let mut at: Vec<usize> = (0..b.strands).collect();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize;
        let (ca, cb) = (coloring.strand_component[at[i - 1]], coloring.strand_component[at[i]]);
        if ca != cb {
            signed[ca.min(cb)][ca.max(cb)] += l.signum() as i64;
        }
        at.swap(i - 1, i);
    }
    for (a, row) in signed.iter().enumerate() {
        for (c, twice) in row.iter().enumerate().skip(a + 1) {
            entries.push(LinkingEntry {
                first: coloring.names[a].clone(),
                second: coloring.names[c].clone(),
                lk: twice / 2,
            });
        }
    }
    LinkingReport { entries }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StageStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageResult {
    pub status: StageStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stages {
    pub strand_count: StageResult,
    pub cycle_type: StageResult,
    pub linking: StageResult,
    pub alexander: StageResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub params: FamilyParams,
    pub word: String,
    pub strand_count: usize,
    pub cycle_type: Vec<usize>,
    pub linking: Option<LinkingReport>,
    pub alexander_match: Option<bool>,
    pub stages: Stages,
}

impl ValidationReport {
    pub fn verified(&self) -> bool {
        self.alexander_match == Some(true)
    }
}

fn stage(pass: bool, detail: String) -> StageResult {
    StageResult {
        status: if pass { StageStatus::Pass } else { StageStatus::Fail },
        detail,
    }
}

fn skipped() -> StageResult {
    StageResult {
        status: StageStatus::Skipped,
        detail: "earlier stage failed".into(),
    }
}

/// Checks that `closure(b) ∪ axis` can be `L_{m,p}`: strand count `m + 1`,
/// cycle type `{1, m}`, linking numbers `lk(A,B) = 1`, `lk(A,C) = m`,
/// `|lk(B,C)| = mp - 1`, and Alexander polynomial equal to the closed form
/// up to a unit. Stops at the first failing stage.
///
/// When `lk(B,C) = mp - 1` instead of `1 - mp` the closure is compared with
/// the mirror of `L_{m,p}` with its axis reversed, whose polynomial is
/// `Δ(x^{-1}, s, t)`.
pub fn validate_candidate(b: &BraidWord, params: FamilyParams) -> Result<ValidationReport> {
    let m = params.m() as usize;
    let mut report = ValidationReport {
        params,
        word: b.to_string(),
        strand_count: b.strands(),
        cycle_type: b.cycle_type(),
        linking: None,
        alexander_match: None,
        stages: Stages {
            strand_count: skipped(),
            cycle_type: skipped(),
            linking: skipped(),
            alexander: skipped(),
        },
    };

    let ok = b.strands() == m + 1;
    report.stages.strand_count = stage(ok, format!("{} strands, need {}", b.strands(), m + 1));
    if !ok {
        return Ok(report);
    }

    let mut want = vec![1, m];
    want.sort_unstable();
    let ok = report.cycle_type == want;
    report.stages.cycle_type = stage(ok, format!("cycle type {:?}, need {:?}", report.cycle_type, want));
    if !ok {
        return Ok(report);
    }

    let cycles = b.cycles();
    let b_strand = cycles.iter().find(|c| c.len() == 1).unwrap()[0];
    let c_strand = cycles.iter().find(|c| c[0] != b_strand).unwrap()[0];
    let coloring = ComponentColoring::by_strand(b, "x", &[(b_strand, "s"), (c_strand, "t")])?;
    let lk = linking_report(b, &coloring);
    let (ab, ac, bc) = (
        lk.get("x", "s").unwrap(),
        lk.get("x", "t").unwrap(),
        lk.get("s", "t").unwrap(),
    );
    let (want_ab, want_ac, want_bc) = linking_numbers(params);
    let ok = ab == want_ab && ac == want_ac && bc.abs() == want_bc.abs();
    report.stages.linking = stage(
        ok,
        format!(
            "lk(A,B)={ab}, lk(A,C)={ac}, lk(B,C)={bc}; need {want_ab}, {want_ac}, ±{}",
            want_bc.abs()
        ),
    );
    report.linking = Some(lk);
    if !ok {
        return Ok(report);
    }

    let fox = fox_alexander(b, &coloring)?;
    let delta = delta_lmp(params)?;
    let ring = link_ring();
    let (target, label) = if bc == want_bc {
        (delta, "Δ(x, s, t)")
    } else {
        let x_inv = LaurentPoly::monomial(&ring, vec![-1, 0, 0], 1);
        let s = LaurentPoly::var(&ring, "s")?;
        let t = LaurentPoly::var(&ring, "t")?;
        (
            delta.subst(&ring, &[("x", &x_inv), ("s", &s), ("t", &t)])?,
            "Δ(x^-1, s, t)",
        )
    };
    let ok = fox.delta.unit_equivalent(&target)?.is_some();
    report.alexander_match = Some(ok);
    report.stages.alexander = stage(
        ok,
        if ok {
            format!("Fox-calculus polynomial is unit-equivalent to {label}")
        } else {
            format!("Fox-calculus polynomial {} differs from {label}", fox.delta)
        },
    );
    Ok(report)
}

/// `σ_1^{2(1-mp)} σ_2 ⋯ σ_m` on `m + 1` strands. Strand 1 closes up to `B`;
/// it winds `mp - 1` times negatively around the neighbouring strand, and
/// the trailing cycle joins the remaining `m` strands into `C`.
pub fn twist_candidate(params: FamilyParams) -> BraidWord {
    let m = params.m() as i32;
    let mut letters = vec![-1; 2 * (params.mp() - 1) as usize];
    letters.extend(2..=m);
    BraidWord::new(m as usize + 1, letters).unwrap()
}

/// One entry of the candidate manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub m: u32,
    pub p: u32,
    pub word: String,
    pub verified: bool,
    pub stages: Stages,
}

impl ManifestEntry {
    pub fn from_report(r: &ValidationReport) -> Self {
        ManifestEntry {
            m: r.params.m() as u32,
            p: r.params.p() as u32,
            word: r.word.clone(),
            verified: r.verified(),
            stages: r.stages.clone(),
        }
    }

    pub fn braid(&self) -> Result<BraidWord> {
        BraidWord::parse(self.m as usize + 1, &self.word)
    }
}

pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    serde_json::from_str(text).map_err(|e| Error::BraidParse(format!("manifest: {e}")))
}

/// Manifest shipped with the crate.
pub const BUNDLED_MANIFEST: &str = include_str!("../data/candidates.json");

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let b = w(3, "1 2 -1 2");
        assert_eq!(b.letters(), &[1, 2, -1, 2]);
        assert_eq!(b.to_string(), "1 2 -1 2");
        assert!(BraidWord::parse(3, "1 3").is_err());
        assert!(BraidWord::parse(3, "0").is_err());
        assert!(BraidWord::parse(3, "a").is_err());
        assert!(BraidWord::parse(0, "").is_err());
        assert!(w(1, "").letters().is_empty());
    }

    #[test]
    fn artin_examples() {
        let id = BraidWord::identity(3).unwrap();
        for g in 1..=3 {
            assert_eq!(artin_image(&id, g).unwrap(), FreeGroupWord::generator(g - 1));
        }
        let s1 = w(2, "1");
        assert_eq!(artin_image(&s1, 1).unwrap().to_string(), "x1 x2 x1^-1");
        assert_eq!(artin_image(&s1, 2).unwrap().to_string(), "x1");
        let s11 = w(2, "1 1");
        // (x1 x2) x1 (x1 x2)^-1
        assert_eq!(artin_image(&s11, 1).unwrap().to_string(), "x1 x2 x1 x2^-1 x1^-1");
        assert!(artin_image(&s1, 3).is_err());
        assert!(artin_image(&s1, 0).is_err());
    }

    #[test]
    fn artin_braid_relation() {
        let a = artin_images(&w(3, "1 2 1"));
        let b = artin_images(&w(3, "2 1 2"));
        assert_eq!(a, b);
    }

    #[test]
    fn free_word_reduces() {
        let a = FreeGroupWord::from_letters([(0, 1), (1, 1), (1, -1), (0, -1)]);
        assert!(a.is_empty());
    }

    #[test]
    fn permutation_and_cycles() {
        let b = w(3, "1 2");
        assert_eq!(b.cycle_type(), vec![3]);
        assert_eq!(w(3, "1 1 2").cycle_type(), vec![1, 2]);
        assert_eq!(BraidWord::identity(3).unwrap().cycle_type(), vec![1, 1, 1]);
    }

    #[test]
    fn hopf_link_is_trivial() {
        let b = BraidWord::identity(1).unwrap();
        let col = ComponentColoring::new(&b, "x", &["s"]).unwrap();
        let r = fox_alexander(&b, &col).unwrap();
        assert!(r.delta.is_one());
    }

    #[test]
    fn linking_examples() {
        let id = BraidWord::identity(2).unwrap();
        let col = ComponentColoring::new(&id, "x", &["s", "t"]).unwrap();
        let lk = linking_report(&id, &col);
        assert_eq!(
            (lk.get("x", "s"), lk.get("x", "t"), lk.get("s", "t")),
            (Some(1), Some(1), Some(0))
        );
        let b = w(2, "1 1");
        let col = ComponentColoring::new(&b, "x", &["s", "t"]).unwrap();
        assert_eq!(linking_report(&b, &col).get("s", "t"), Some(1));
    }

    #[test]
    fn coloring_validation() {
        let b = w(3, "1 2");
        assert!(ComponentColoring::new(&b, "x", &["s", "t"]).is_err());
        assert!(ComponentColoring::new(&b, "x", &["x"]).is_err());
        let c = ComponentColoring::new(&b, "x", &["s"]).unwrap();
        assert_eq!(c.ring().names(), &["x".to_string(), "s".to_string()]);
    }

    #[test]
    fn identity_rejected_at_cycle_stage() {
        let params = FamilyParams::new(2, 2).unwrap();
        let r = validate_candidate(&BraidWord::identity(3).unwrap(), params).unwrap();
        assert_eq!(r.stages.strand_count.status, StageStatus::Pass);
        assert_eq!(r.stages.cycle_type.status, StageStatus::Fail);
        assert_eq!(r.stages.linking.status, StageStatus::Skipped);
        assert_eq!(r.stages.alexander.status, StageStatus::Skipped);
    }

    #[test]
    fn wrong_strand_count() {
        let params = FamilyParams::new(2, 2).unwrap();
        let r = validate_candidate(&BraidWord::identity(4).unwrap(), params).unwrap();
        assert_eq!(r.stages.strand_count.status, StageStatus::Fail);
        assert_eq!(r.stages.cycle_type.status, StageStatus::Skipped);
    }

    #[test]
    fn twist_candidate_matches_closed_form() {
        for (m, p) in [(1, 2), (2, 2), (3, 2), (2, 3)] {
            let params = FamilyParams::new(m, p).unwrap();
            let r = validate_candidate(&twist_candidate(params), params).unwrap();
            assert!(r.verified(), "{params}: {:?}", r.stages);
        }
        assert_eq!(
            twist_candidate(FamilyParams::new(2, 2).unwrap()).to_string(),
            "-1 -1 -1 -1 -1 -1 2"
        );
    }

    #[test]
    fn cable_fails_alexander_stage() {
        // C as a level (2, -3) cable of B: right linking numbers, wrong polynomial
        let params = FamilyParams::new(2, 2).unwrap();
        let r = validate_candidate(&w(3, "-2 -1 -1").pow(3), params).unwrap();
        assert_eq!(r.stages.linking.status, StageStatus::Pass);
        assert_eq!(r.stages.alexander.status, StageStatus::Fail);
    }
}
