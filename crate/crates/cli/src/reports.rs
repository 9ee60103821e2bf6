//! Report documents emitted on stdout.
//!
//! Field order is fixed by the struct layouts and every rational is a string
//! in lowest terms, so identical inputs produce byte-identical reports.

use antinef::json::{divisor_to_strings, matrix_to_strings, ConfigDoc};
use antinef::multiplicity::{MixedMultiplicityForm, MultiplicityPolynomial};
use antinef::rational::format_rational;
use antinef::theorems::{EqualityCase, MinkowskiReport, ReesReport};
use antinef::zariski::ZariskiDecomposition;
use serde::Serialize;

#[derive(Serialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

impl ValidateReport {
    pub fn to_markdown(&self) -> String {
        if self.valid {
            "# Validation\n\nconfiguration is valid\n".to_string()
        } else {
            let mut out = String::from("# Validation\n\nconfiguration is invalid:\n\n");
            for v in &self.violations {
                out.push_str(&format!("- {v}\n"));
            }
            out
        }
    }
}

#[derive(Serialize)]
pub struct DecomposeReport {
    pub delta: Vec<String>,
    pub b: Vec<String>,
    pub null_support: Vec<usize>,
}

impl DecomposeReport {
    pub fn new(z: &ZariskiDecomposition) -> Self {
        Self {
            delta: divisor_to_strings(z.delta()),
            b: divisor_to_strings(z.effective_part()),
            null_support: z.null_support().iter().copied().collect(),
        }
    }
}

#[derive(Serialize)]
pub struct VolumeReport {
    pub volume: String,
}

#[derive(Serialize)]
pub struct PolynomialTermDoc {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Serialize)]
pub struct MixedReport {
    pub matrix: Vec<Vec<String>>,
    pub polynomial: Vec<PolynomialTermDoc>,
    pub weights_applied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_multiplicity: Option<String>,
}

impl MixedReport {
    pub fn new(
        form: &MixedMultiplicityForm,
        poly: &MultiplicityPolynomial,
        product: Option<String>,
    ) -> Self {
        Self {
            matrix: matrix_to_strings(form.matrix()),
            polynomial: poly
                .terms()
                .iter()
                .map(|(exponents, coefficient)| PolynomialTermDoc {
                    exponents: exponents.clone(),
                    coefficient: format_rational(coefficient),
                })
                .collect(),
            weights_applied: form.weights_applied(),
            product_multiplicity: product,
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum EqualityCaseDoc {
    Strict(&'static str),
    Equality { a: String, b: String },
}

impl EqualityCaseDoc {
    pub fn new(case: &EqualityCase) -> Self {
        match case {
            EqualityCase::Strict => Self::Strict("strict"),
            EqualityCase::Equality { a, b } => Self::Equality {
                a: a.to_string(),
                b: b.to_string(),
            },
        }
    }
}

#[derive(Serialize)]
pub struct VerdictsDoc {
    pub log_convexity: bool,
    pub index_products: bool,
    pub index_powers: bool,
    pub minkowski_sum: bool,
}

#[derive(Serialize)]
pub struct MinkowskiReportDoc {
    pub e0: String,
    pub e1: String,
    pub e2: String,
    pub verdicts: VerdictsDoc,
    pub equality_case: EqualityCaseDoc,
}

impl MinkowskiReportDoc {
    pub fn new(r: &MinkowskiReport) -> Self {
        Self {
            e0: format_rational(&r.e0),
            e1: format_rational(&r.e1),
            e2: format_rational(&r.e2),
            verdicts: VerdictsDoc {
                log_convexity: r.verdicts.log_convexity,
                index_products: r.verdicts.index_products,
                index_powers: r.verdicts.index_powers,
                minkowski_sum: r.verdicts.minkowski_sum,
            },
            equality_case: EqualityCaseDoc::new(&r.equality_case),
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Minkowski report\n\n");
        out.push_str(&format!(
            "mixed multiplicities: e0 = {}, e1 = {}, e2 = {}\n\n",
            self.e0, self.e1, self.e2
        ));
        out.push_str("| inequality | verdict |\n|---|---|\n");
        for (name, holds) in [
            ("1) e1^2 <= e0 e2", self.verdicts.log_convexity),
            ("2) index products", self.verdicts.index_products),
            ("3) index powers", self.verdicts.index_powers),
            ("4) minkowski sum", self.verdicts.minkowski_sum),
        ] {
            out.push_str(&format!(
                "| {name} | {} |\n",
                if holds { "holds" } else { "FAILS" }
            ));
        }
        match &self.equality_case {
            EqualityCaseDoc::Strict(_) => out.push_str("\nequality case: strict\n"),
            EqualityCaseDoc::Equality { a, b } => out.push_str(&format!(
                "\nequality case: a = {a}, b = {b} with a Delta1 = b Delta2\n"
            )),
        }
        out
    }
}

#[derive(Serialize)]
pub struct CertificateDoc {
    pub n: u64,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub equal: bool,
}

#[derive(Serialize)]
pub struct ReesReportDoc {
    pub vol1: String,
    pub vol2: String,
    pub volumes_equal: bool,
    pub delta_equal: bool,
    pub certificates: Vec<CertificateDoc>,
}

impl ReesReportDoc {
    pub fn new(r: &ReesReport) -> Self {
        Self {
            vol1: format_rational(&r.vol1),
            vol2: format_rational(&r.vol2),
            volumes_equal: r.volumes_equal,
            delta_equal: r.delta_equal,
            certificates: r
                .certificates
                .iter()
                .map(|c| CertificateDoc {
                    n: c.n,
                    lhs: divisor_to_strings(&c.lhs),
                    rhs: divisor_to_strings(&c.rhs),
                    equal: c.equal,
                })
                .collect(),
        }
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Rees report\n\n");
        out.push_str(&format!(
            "Vol(D1) = {}, Vol(D2) = {}\n\nvolumes equal: {}\nanti-nef parts equal: {}\n",
            self.vol1, self.vol2, self.volumes_equal, self.delta_equal
        ));
        let agreeing = self.certificates.iter().filter(|c| c.equal).count();
        out.push_str(&format!(
            "certificates: {agreeing}/{} agree\n",
            self.certificates.len()
        ));
        out
    }
}

#[derive(Serialize)]
pub struct GammaReport {
    pub gamma: Vec<String>,
    pub status: &'static str,
}

#[derive(Serialize)]
pub struct ColengthReport {
    pub colength: u64,
}

#[derive(Serialize)]
pub struct FitReport {
    pub estimate: f64,
    pub residual: f64,
    pub window: u64,
}

#[derive(Serialize)]
pub struct TauReport {
    pub tau: Vec<u64>,
}

#[derive(Serialize)]
pub struct ToricBuildReport {
    pub config: ConfigDoc,
    pub prime_index: Vec<usize>,
    pub rays: Vec<(u64, u64)>,
}

#[derive(Serialize)]
pub struct BridgeCheckReport {
    pub volume: String,
    pub volume_value: f64,
    pub oracle_estimate: f64,
    pub relative_discrepancy: f64,
    pub window: u64,
}

impl BridgeCheckReport {
    pub fn to_markdown(&self) -> String {
        format!(
            "# Bridge check\n\nexact volume: {} (= {})\noracle estimate: {}\nrelative discrepancy: {}\n",
            self.volume, self.volume_value, self.oracle_estimate, self.relative_discrepancy
        )
    }
}
