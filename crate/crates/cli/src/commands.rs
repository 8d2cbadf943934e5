use composite_codes::codes::{
    min_distance_with, weight_distribution, CyclicCode, DistanceOptions, Engine, Method,
    WeightReport,
};
use composite_codes::constructions::{
    act, find_multiplier, lambda_orbits, qr_generator, DingFamily, SignVector, ThetaSpec,
};
use composite_codes::convolutional::{
    build_encoder, build_encoder_in, check_root_classes, check_root_classes_in,
    free_distance_search, EncoderSummary, FreeDistanceReport, RootClassReport,
};
use composite_codes::decompose::{sign_vector_bound, Decomposition, LowerBound};
use composite_codes::Error;
use serde::Serialize;

use crate::render::{coeffs, d_poly, opt, Row};
use crate::source::{Family, Member, Params, Resolved};
use crate::CliError;

/// Largest `q^k` for which `equiv` compares whole weight distributions.
const WEIGHT_DISTRIBUTION_LIMIT: f64 = (1u64 << 20) as f64;

fn distance(code: &CyclicCode, budget: u64, engine: Engine) -> Result<WeightReport, Error> {
    min_distance_with(&code.to_linear(), &DistanceOptions { budget, engine })
}

fn small_enough(code: &CyclicCode) -> bool {
    (code.field().q() as f64).powi(code.dimension() as i32) <= WEIGHT_DISTRIBUTION_LIMIT
}

fn sign_list(members: &[SignVector]) -> String {
    members
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
pub struct ConstructRecord {
    pub tag: String,
    pub params: Params,
    pub epsilon: Option<SignVector>,
    pub generator: Vec<u64>,
    pub n: usize,
    pub k: usize,
    pub theta_spec: Option<ThetaSpec>,
}

impl Row for ConstructRecord {
    fn headers() -> Vec<&'static str> {
        vec!["tag", "params", "epsilon", "n", "k", "generator"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.tag.clone(),
            self.params.label(),
            opt(self.epsilon.as_ref()),
            self.n.to_string(),
            self.k.to_string(),
            coeffs(&self.generator),
        ]
    }
}

pub fn construct(res: &Resolved) -> Vec<ConstructRecord> {
    res.members
        .iter()
        .map(|m| ConstructRecord {
            tag: m.tag.clone(),
            params: m.params.clone(),
            epsilon: m.epsilon.clone(),
            generator: m.code.generator().reps(),
            n: m.code.len(),
            k: m.code.dimension(),
            theta_spec: m.theta.clone(),
        })
        .collect()
}

#[derive(Serialize)]
pub struct MindistRecord {
    pub tag: String,
    pub params: Params,
    pub epsilon: Option<SignVector>,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub exact: bool,
    pub proved_lower_bound: usize,
    pub method: Method,
    pub certificate: Vec<u64>,
}

impl Row for MindistRecord {
    fn headers() -> Vec<&'static str> {
        vec!["tag", "params", "epsilon", "n", "k", "d", "exact", "lower_bound", "method"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.tag.clone(),
            self.params.label(),
            opt(self.epsilon.as_ref()),
            self.n.to_string(),
            self.k.to_string(),
            self.d.to_string(),
            self.exact.to_string(),
            self.proved_lower_bound.to_string(),
            serde_json::to_value(self.method)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default(),
        ]
    }
}

pub fn mindist(res: &Resolved, budget: u64, engine: Engine) -> Result<Vec<MindistRecord>, CliError> {
    res.members
        .iter()
        .map(|m| {
            let rep = distance(&m.code, budget, engine)?;
            Ok(MindistRecord {
                tag: m.tag.clone(),
                params: m.params.clone(),
                epsilon: m.epsilon.clone(),
                n: rep.n,
                k: rep.k,
                d: rep.d,
                exact: rep.exact,
                proved_lower_bound: rep.proved_lower_bound,
                method: rep.method,
                certificate: rep.certificate.iter().map(|e| e.0).collect(),
            })
        })
        .collect()
}

#[derive(Serialize)]
pub struct WeightdistRecord {
    pub tag: String,
    pub params: Params,
    pub epsilon: Option<SignVector>,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub exact: bool,
    pub distribution: Vec<u64>,
}

impl Row for WeightdistRecord {
    fn headers() -> Vec<&'static str> {
        vec!["tag", "params", "epsilon", "n", "k", "d", "exact", "distribution"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.tag.clone(),
            self.params.label(),
            opt(self.epsilon.as_ref()),
            self.n.to_string(),
            self.k.to_string(),
            self.d.to_string(),
            self.exact.to_string(),
            coeffs(&self.distribution),
        ]
    }
}

pub fn weightdist(res: &Resolved) -> Result<Vec<WeightdistRecord>, CliError> {
    res.members
        .iter()
        .map(|m| {
            let distribution = weight_distribution(&m.code.to_linear())?;
            let d = distribution
                .iter()
                .skip(1)
                .position(|&a| a > 0)
                .map_or(0, |i| i + 1);
            Ok(WeightdistRecord {
                tag: m.tag.clone(),
                params: m.params.clone(),
                epsilon: m.epsilon.clone(),
                n: m.code.len(),
                k: m.code.dimension(),
                d,
                exact: true,
                distribution,
            })
        })
        .collect()
}

#[derive(Serialize)]
pub struct DecomposeRecord {
    pub tag: String,
    pub params: Params,
    pub epsilon: Option<SignVector>,
    #[serde(flatten)]
    pub lower: LowerBound,
    /// The component bound, raised for non-constant sign vectors.
    pub reported_bound: usize,
}

impl Row for DecomposeRecord {
    fn headers() -> Vec<&'static str> {
        vec![
            "tag", "params", "epsilon", "split", "components", "bound", "doubled", "attained",
            "reported_bound",
        ]
    }

    fn cells(&self) -> Vec<String> {
        let comps: Vec<String> = self
            .lower
            .components
            .iter()
            .map(|c| match c.distance {
                Some(d) => format!("t{}:k={},d={}{}", c.t, c.dimension, d, if c.exact { "" } else { "?" }),
                None => format!("t{}:zero", c.t),
            })
            .collect();
        vec![
            self.tag.clone(),
            self.params.label(),
            opt(self.epsilon.as_ref()),
            format!("{}x{}", self.lower.n, self.lower.r),
            comps.join(" "),
            self.lower.bound.to_string(),
            self.lower.doubled.to_string(),
            self.lower.attained.to_string(),
            self.reported_bound.to_string(),
        ]
    }
}

pub fn decompose(
    res: &Resolved,
    split: (Option<usize>, Option<usize>),
    budget: u64,
) -> Result<Vec<DecomposeRecord>, CliError> {
    let (n, r) = match (&res.family, split) {
        (_, (Some(n), Some(r))) => (n, r),
        (Family::Cr(f), (None, None)) => (f.n() as usize, f.r() as usize),
        (Family::Ding(fams), (None, None)) => (fams[0].n1() as usize, fams[0].n2() as usize),
        _ => {
            return Err(CliError::Usage(
                "give both --split-n and --split-r (required for poly codes)".into(),
            ))
        }
    };
    // distance of the length-n QR code, for the sign-vector bound
    let d_nq = match &res.family {
        Family::Cr(f) if n as u64 == f.n() => {
            let qr = CyclicCode::new(qr_generator(f.n(), f.q(), 1)?, n)?;
            Some(distance(&qr, budget, Engine::Auto)?.d)
        }
        _ => None,
    };
    res.members
        .iter()
        .map(|m| {
            let dec = match res.splitting_field(m) {
                Some(sf) if sf.n() == n * r => Decomposition::from_splitting_field(sf.clone(), n, r)?,
                _ => Decomposition::new(m.code.field(), n, r)?,
            };
            let lower = dec.distance_lower_bound(&m.code, budget)?;
            let reported_bound = match (d_nq, &m.epsilon) {
                (Some(d), Some(eps)) => sign_vector_bound(lower.bound, d, eps.is_constant(), n),
                _ => lower.bound,
            };
            Ok(DecomposeRecord {
                tag: m.tag.clone(),
                params: m.params.clone(),
                epsilon: m.epsilon.clone(),
                lower,
                reported_bound,
            })
        })
        .collect()
}

#[derive(Serialize)]
pub struct MultiplierCheck {
    pub u: u64,
    pub action: [i8; 3],
    pub images_exact: bool,
}

#[derive(Serialize)]
pub struct EquivRecord {
    pub tag: String,
    pub params: Params,
    pub class: String,
    pub members: Vec<SignVector>,
    /// `weight-distribution` or `minimum-distance`.
    pub invariant: &'static str,
    pub consistent: bool,
    pub d: Option<usize>,
    pub exact: bool,
    pub distribution: Option<Vec<u64>>,
    pub multipliers: Vec<MultiplierCheck>,
}

impl Row for EquivRecord {
    fn headers() -> Vec<&'static str> {
        vec![
            "tag", "params", "class", "members", "invariant", "consistent", "d", "exact",
            "multipliers",
        ]
    }

    fn cells(&self) -> Vec<String> {
        let mult: Vec<String> = self
            .multipliers
            .iter()
            .map(|m| format!("u={}:{}", m.u, m.images_exact))
            .collect();
        vec![
            self.tag.clone(),
            self.params.label(),
            self.class.clone(),
            sign_list(&self.members),
            self.invariant.to_string(),
            self.consistent.to_string(),
            opt(self.d),
            self.exact.to_string(),
            mult.join(" "),
        ]
    }
}

/// Compares the invariant across a class of codes.
fn class_invariant(
    codes: &[CyclicCode],
    budget: u64,
) -> Result<(&'static str, bool, Option<usize>, bool, Option<Vec<u64>>), CliError> {
    if codes.iter().all(small_enough) {
        let dists = codes
            .iter()
            .map(|c| weight_distribution(&c.to_linear()))
            .collect::<Result<Vec<_>, _>>()?;
        let consistent = dists.windows(2).all(|w| w[0] == w[1]);
        let d = dists[0].iter().skip(1).position(|&a| a > 0).map(|i| i + 1);
        return Ok(("weight-distribution", consistent, d, true, Some(dists[0].clone())));
    }
    let reps = codes
        .iter()
        .map(|c| distance(c, budget, Engine::Auto))
        .collect::<Result<Vec<_>, _>>()?;
    let exact = reps.iter().all(|r| r.exact);
    let consistent = exact && reps.windows(2).all(|w| w[0].d == w[1].d);
    Ok(("minimum-distance", consistent, Some(reps[0].d), exact, None))
}

fn ding_multipliers(fam: &DingFamily, class: &[SignVector]) -> Result<Vec<MultiplierCheck>, CliError> {
    let (pa, pb) = fam.tag().multiplier_actions();
    let (n1, n2) = (fam.n1(), fam.n2());
    let checks = [(find_multiplier(n1, n2, -1, 1), pa), (find_multiplier(n1, n2, 1, -1), pb)];
    checks
        .iter()
        .map(|&(u, action)| {
            let mut images_exact = true;
            for eps in class {
                let image = fam.code(eps)?.multiplier_image(u)?;
                images_exact &= image == fam.code(&act(action, eps))?;
            }
            Ok(MultiplierCheck {
                u,
                action,
                images_exact,
            })
        })
        .collect()
}

pub fn equiv(res: &Resolved, budget: u64) -> Result<Vec<EquivRecord>, CliError> {
    let mut out = Vec::new();
    match &res.family {
        Family::Cr(fam) => {
            for (i, orbit) in lambda_orbits(fam.q(), fam.r() as usize)?.into_iter().enumerate() {
                let codes = orbit.iter().map(|e| fam.code(e)).collect::<Result<Vec<_>, _>>()?;
                let (invariant, consistent, d, exact, distribution) = class_invariant(&codes, budget)?;
                out.push(EquivRecord {
                    tag: "cr".into(),
                    params: res.params.clone(),
                    class: (i + 1).to_string(),
                    members: orbit,
                    invariant,
                    consistent,
                    d,
                    exact,
                    distribution,
                    multipliers: Vec::new(),
                });
            }
        }
        Family::Ding(fams) => {
            for fam in fams {
                for (i, class) in fam.tag().classes().into_iter().enumerate() {
                    let codes = class.iter().map(|e| fam.code(e)).collect::<Result<Vec<_>, _>>()?;
                    let (invariant, consistent, d, exact, distribution) =
                        class_invariant(&codes, budget)?;
                    out.push(EquivRecord {
                        tag: fam.tag().to_string(),
                        params: res.params.clone(),
                        class: format!("A{}", i + 1),
                        multipliers: ding_multipliers(fam, &class)?,
                        members: class.to_vec(),
                        invariant,
                        consistent,
                        d,
                        exact,
                        distribution,
                    });
                }
            }
        }
        Family::Poly => {
            return Err(CliError::Usage("equiv needs a cr or ding family".into()));
        }
    }
    Ok(out)
}

#[derive(Serialize)]
pub struct ConvRecord {
    pub tag: String,
    pub params: Params,
    pub epsilon: Option<SignVector>,
    pub root_classes: RootClassReport,
    pub encoder: EncoderSummary,
    pub free_distance: Option<FreeDistanceReport>,
}

impl Row for ConvRecord {
    fn headers() -> Vec<&'static str> {
        vec![
            "tag", "epsilon", "k", "n", "delta", "row_degrees", "minors_gcd", "d_free", "exact",
            "matrix",
        ]
    }

    fn cells(&self) -> Vec<String> {
        let e = &self.encoder;
        let matrix: Vec<String> = e
            .rows
            .iter()
            .map(|row| row.iter().map(|p| d_poly(p)).collect::<Vec<_>>().join(" "))
            .collect();
        let (d_free, exact) = match &self.free_distance {
            Some(f) if f.exact => (f.upper_bound.to_string(), "true".to_string()),
            Some(f) => (format!("{}..{}", f.lower_bound, f.upper_bound), "false".to_string()),
            None => (String::new(), String::new()),
        };
        vec![
            self.tag.clone(),
            opt(self.epsilon.as_ref()),
            e.k.to_string(),
            e.n.to_string(),
            e.delta.to_string(),
            coeffs(&e.row_degrees.iter().map(|&d| d as u64).collect::<Vec<_>>()),
            d_poly(&e.minors_gcd),
            d_free,
            exact,
            matrix.join(" ; "),
        ]
    }
}

pub struct ConvOptions {
    pub k: usize,
    pub block: Option<usize>,
    pub free_distance: bool,
    pub degree_bound: usize,
}

pub fn conv(res: &Resolved, opts: &ConvOptions, budget: u64) -> Result<Vec<ConvRecord>, CliError> {
    let n = match (&res.family, opts.block) {
        (_, Some(n)) => n,
        (Family::Cr(f), None) => f.n() as usize,
        (Family::Ding(fams), None) => fams[0].n1() as usize,
        (Family::Poly, None) => return Err(CliError::Usage("poly codes need --block".into())),
    };
    res.members
        .iter()
        .map(|m: &Member| {
            let (root_classes, enc) = match res.splitting_field(m) {
                Some(sf) => (
                    check_root_classes_in(sf, &m.code, n, opts.k)?,
                    build_encoder_in(sf, &m.code, n, opts.k)?,
                ),
                None => (
                    check_root_classes(&m.code, n, opts.k)?,
                    build_encoder(&m.code, n, opts.k)?,
                ),
            };
            let free_distance = if opts.free_distance {
                Some(free_distance_search(&enc, opts.degree_bound, budget)?)
            } else {
                None
            };
            Ok(ConvRecord {
                tag: m.tag.clone(),
                params: m.params.clone(),
                epsilon: m.epsilon.clone(),
                root_classes,
                encoder: enc.summary(),
                free_distance,
            })
        })
        .collect()
}

#[derive(Serialize)]
pub struct TableRow {
    pub construction: String,
    pub class: String,
    pub members: Vec<SignVector>,
    pub n: usize,
    pub k: usize,
    /// Weight of the lightest codeword found; the true distance when `exact`.
    pub d: Option<usize>,
    pub d_lower: usize,
    pub exact: bool,
    /// `exact`, `bounded` or `budget-exceeded`.
    pub status: &'static str,
}

impl Row for TableRow {
    fn headers() -> Vec<&'static str> {
        vec!["construction", "class", "members", "n", "k", "d", "exact", "status", "best"]
    }

    fn cells(&self) -> Vec<String> {
        let d = match (self.d, self.exact) {
            (Some(d), true) => d.to_string(),
            (Some(d), false) => format!("{}..{}", self.d_lower, d),
            (None, _) => format!(">={}", self.d_lower),
        };
        vec![
            self.construction.clone(),
            self.class.clone(),
            sign_list(&self.members),
            self.n.to_string(),
            self.k.to_string(),
            d,
            self.exact.to_string(),
            self.status.to_string(),
            String::new(),
        ]
    }
}

fn table_row(
    construction: String,
    class: String,
    members: Vec<SignVector>,
    code: &CyclicCode,
    budget: u64,
) -> Result<TableRow, CliError> {
    let (d, d_lower, exact, status) = match distance(code, budget, Engine::Auto) {
        Ok(rep) if rep.exact => (Some(rep.d), rep.d, true, "exact"),
        Ok(rep) => (Some(rep.d), rep.proved_lower_bound, false, "bounded"),
        Err(Error::BudgetExceeded { .. }) => (None, 1, false, "budget-exceeded"),
        Err(e) => return Err(e.into()),
    };
    Ok(TableRow {
        construction,
        class,
        members,
        n: code.len(),
        k: code.dimension(),
        d,
        d_lower,
        exact,
        status,
    })
}

/// One row per equivalence class; distances come from the first member.
pub fn table(res: &Resolved, budget: u64) -> Result<Vec<TableRow>, CliError> {
    let mut rows = Vec::new();
    match &res.family {
        Family::Cr(fam) => {
            for (i, orbit) in lambda_orbits(fam.q(), fam.r() as usize)?.into_iter().enumerate() {
                let code = fam.code(&orbit[0])?;
                rows.push(table_row("cr".into(), (i + 1).to_string(), orbit, &code, budget)?);
            }
        }
        Family::Ding(fams) => {
            for fam in fams {
                for (i, class) in fam.tag().classes().into_iter().enumerate() {
                    let code = fam.code(&class[0])?;
                    rows.push(table_row(
                        fam.tag().to_string(),
                        format!("A{}", i + 1),
                        class.to_vec(),
                        &code,
                        budget,
                    )?);
                }
            }
        }
        Family::Poly => return Err(CliError::Usage("table needs a cr or ding family".into())),
    }
    Ok(rows)
}
