//! Turning command-line flags into labelled cyclic codes.

use clap::{Args, ValueEnum};
use composite_codes::codes::CyclicCode;
use composite_codes::constructions::{
    sign_triples, CrFamily, DingFamily, DingTag, SignVector, ThetaSpec,
};
use composite_codes::gf::field_of_order;
use composite_codes::poly::SplittingField;
use composite_codes::Poly;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Sign-vector codes of length n*r built from QR codes of length n
    Cr,
    /// Ding's three constructions of length n1*n2
    Ding,
    /// An explicit generator polynomial
    Poly,
}

#[derive(Args, Clone, Debug, Default)]
pub struct SourceArgs {
    /// Code family; inferred from the other flags when omitted
    #[arg(value_enum)]
    pub kind: Option<Kind>,
    /// Shorthand for the ding family
    #[arg(long)]
    pub ding: bool,
    /// Field order
    #[arg(long)]
    pub q: Option<u64>,
    /// Prime length of the QR building blocks (cr)
    #[arg(long)]
    pub n: Option<u64>,
    /// Number of blocks (cr)
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub n1: Option<u64>,
    #[arg(long)]
    pub n2: Option<u64>,
    /// Ding construction 1, 2 or 3; all three when omitted
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub tag: Option<u8>,
    /// Comma-separated signs such as 1,-1,-1, or `all`
    #[arg(long, allow_hyphen_values = true, default_value = "all")]
    pub epsilon: String,
    /// Code length (poly)
    #[arg(long)]
    pub length: Option<usize>,
    /// Generator coefficients, low to high, comma separated (poly)
    #[arg(long)]
    pub generator: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n2: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
}

impl Params {
    pub fn label(&self) -> String {
        let mut parts = vec![format!("q={}", self.q)];
        let named = [
            ("n", self.n),
            ("r", self.r),
            ("n1", self.n1),
            ("n2", self.n2),
            ("length", self.length.map(|l| l as u64)),
        ];
        parts.extend(named.iter().filter_map(|(k, v)| v.map(|v| format!("{k}={v}"))));
        parts.join(" ")
    }
}

pub enum Family {
    Cr(CrFamily),
    Ding(Vec<DingFamily>),
    Poly,
}

/// One code together with the labels it was built from.
pub struct Member {
    pub tag: String,
    pub params: Params,
    pub epsilon: Option<SignVector>,
    pub code: CyclicCode,
    pub theta: Option<ThetaSpec>,
    /// Index into the family's Ding constructions.
    pub ding: Option<usize>,
}

pub struct Resolved {
    pub family: Family,
    pub params: Params,
    pub members: Vec<Member>,
}

impl Resolved {
    pub fn splitting_field(&self, member: &Member) -> Option<&SplittingField> {
        match &self.family {
            Family::Cr(f) => Some(f.splitting_field()),
            Family::Ding(fams) => member.ding.map(|i| fams[i].splitting_field()),
            Family::Poly => None,
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{kind} codes need --{flag}")))
}

fn parse_signs(text: &str, len: usize) -> Result<SignVector, CliError> {
    let signs = text
        .split(',')
        .map(|s| match s.trim() {
            "1" | "+1" | "+" => Ok(1),
            "-1" | "-" => Ok(-1),
            other => Err(CliError::Usage(format!("bad sign `{other}` in --epsilon"))),
        })
        .collect::<Result<Vec<i8>, _>>()?;
    if signs.len() != len {
        return Err(CliError::Usage(format!(
            "--epsilon needs {len} signs, got {}",
            signs.len()
        )));
    }
    Ok(SignVector(signs))
}

fn parse_coefficients(text: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("bad coefficient `{s}` in --generator")))
        })
        .collect()
}

impl SourceArgs {
    pub fn kind(&self) -> Kind {
        if let Some(k) = self.kind {
            k
        } else if self.ding || self.n1.is_some() || self.n2.is_some() || self.tag.is_some() {
            Kind::Ding
        } else if self.generator.is_some() || self.length.is_some() {
            Kind::Poly
        } else {
            Kind::Cr
        }
    }

    fn selection(&self, all: Vec<SignVector>, len: usize) -> Result<Vec<SignVector>, CliError> {
        if self.epsilon.trim() == "all" {
            Ok(all)
        } else {
            Ok(vec![parse_signs(&self.epsilon, len)?])
        }
    }

    /// Validates the parameters and builds every selected code.
    pub fn resolve(&self, theta_power: u64) -> Result<Resolved, CliError> {
        match self.kind() {
            Kind::Cr => {
                let q = need(self.q, "q", "cr")?;
                let n = need(self.n, "n", "cr")?;
                let r = need(self.r, "r", "cr")?;
                let fam = CrFamily::with_theta_power(q, n, r, theta_power)?;
                let params = Params {
                    q,
                    n: Some(n),
                    r: Some(r),
                    n1: None,
                    n2: None,
                    length: None,
                };
                let members = self
                    .selection(fam.lambda(), r as usize)?
                    .into_iter()
                    .map(|eps| {
                        Ok(Member {
                            tag: "cr".into(),
                            params: params.clone(),
                            code: fam.code(&eps)?,
                            epsilon: Some(eps),
                            theta: Some(fam.theta_spec()),
                            ding: None,
                        })
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(Resolved {
                    family: Family::Cr(fam),
                    params,
                    members,
                })
            }
            Kind::Ding => {
                let q = need(self.q, "q", "ding")?;
                let n1 = need(self.n1, "n1", "ding")?;
                let n2 = need(self.n2, "n2", "ding")?;
                let tags = match self.tag {
                    Some(t) => vec![DingTag::from_number(t)?],
                    None => vec![DingTag::One, DingTag::Two, DingTag::Three],
                };
                let fams = tags
                    .iter()
                    .map(|&t| DingFamily::with_theta_power(t, n1, n2, q, theta_power))
                    .collect::<Result<Vec<_>, _>>()?;
                let params = Params {
                    q,
                    n: None,
                    r: None,
                    n1: Some(n1),
                    n2: Some(n2),
                    length: None,
                };
                let selection = self.selection(sign_triples(), 3)?;
                let mut members = Vec::new();
                for (i, fam) in fams.iter().enumerate() {
                    for eps in &selection {
                        members.push(Member {
                            tag: fam.tag().to_string(),
                            params: params.clone(),
                            code: fam.code(eps)?,
                            epsilon: Some(eps.clone()),
                            theta: Some(fam.theta_spec()),
                            ding: Some(i),
                        });
                    }
                }
                Ok(Resolved {
                    family: Family::Ding(fams),
                    params,
                    members,
                })
            }
            Kind::Poly => {
                let q = need(self.q, "q", "poly")?;
                let length = need(self.length, "length", "poly")?;
                let coeffs = parse_coefficients(&need(self.generator.clone(), "generator", "poly")?)?;
                let field = field_of_order(q)?;
                let g = Poly::from_reps(&field, &coeffs)?;
                let params = Params {
                    q,
                    n: None,
                    r: None,
                    n1: None,
                    n2: None,
                    length: Some(length),
                };
                let member = Member {
                    tag: "poly".into(),
                    params: params.clone(),
                    code: CyclicCode::new(g, length)?,
                    epsilon: None,
                    theta: None,
                    ding: None,
                };
                Ok(Resolved {
                    family: Family::Poly,
                    params,
                    members: vec![member],
                })
            }
        }
    }
}
