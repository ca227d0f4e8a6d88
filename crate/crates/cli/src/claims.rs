//! Registry of claims runnable through `gel verify`.

use gel_core::verify::{
    edge_add_decrease_search, verify_coentropy, verify_density_implies_star, verify_edge_addition_tr2,
    verify_h2_consistency, verify_param_comparability, verify_renyi_max, verify_renyi_star_min,
    verify_star_min_von_neumann, verify_tree_extremes, GraphParam, TreeEntropy, VerificationResult, VerifyConfig,
    VerifyError,
};

/// Claim-specific knobs; each claim reads only the ones it needs.
#[derive(Debug, Clone)]
pub struct ClaimArgs {
    pub n: usize,
    pub alphas: Vec<f64>,
    pub entropy: TreeEntropy,
    pub params: Vec<GraphParam>,
    pub group_tol: f64,
}

type Runner = fn(&ClaimArgs, &VerifyConfig) -> Result<Vec<VerificationResult>, VerifyError>;

pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    pub run: Runner,
}

fn per_alpha(
    a: &ClaimArgs,
    cfg: &VerifyConfig,
    f: fn(usize, f64, &VerifyConfig) -> Result<VerificationResult, VerifyError>,
) -> Result<Vec<VerificationResult>, VerifyError> {
    let alphas = if a.alphas.is_empty() { vec![2.0] } else { a.alphas.clone() };
    alphas.into_iter().map(|alpha| f(a.n, alpha, cfg)).collect()
}

pub const CLAIMS: &[Claim] = &[
    Claim {
        id: "star-min-S",
        summary: "every connected graph has S(G) >= S(star)",
        run: |a, c| Ok(vec![verify_star_min_von_neumann(a.n, c)?]),
    },
    Claim {
        id: "tree-extremes",
        summary: "star and path are the extremes among trees (--entropy s|h2)",
        run: |a, c| Ok(vec![verify_tree_extremes(a.n, a.entropy, c)?]),
    },
    Claim {
        id: "renyi-star-min",
        summary: "every connected graph has H_alpha(G) >= H_alpha(star)",
        run: |a, c| per_alpha(a, c, verify_renyi_star_min),
    },
    Claim {
        id: "renyi-max",
        summary: "0 <= H_alpha(G) <= log2(n-1) with a unique zero",
        run: |a, c| per_alpha(a, c, verify_renyi_max),
    },
    Claim {
        id: "edge-add-decrease",
        summary: "adding an edge never lowers S (refuted for n >= 5)",
        run: |a, c| Ok(vec![edge_add_decrease_search(a.n, c)?]),
    },
    Claim {
        id: "coentropy",
        summary: "equal S implies equal spectra (refuted by coentropy groups)",
        run: |a, c| Ok(vec![verify_coentropy(a.n, a.group_tol, c)?]),
    },
    Claim {
        id: "param-compare",
        summary: "S is comparable with matching number, diameter, max degree (--param)",
        run: |a, c| {
            let params = if a.params.is_empty() {
                vec![GraphParam::Matching, GraphParam::Diameter, GraphParam::MaxDegree]
            } else {
                a.params.clone()
            };
            params.into_iter().map(|p| verify_param_comparability(a.n, p, c)).collect()
        },
    },
    Claim {
        id: "density-implies-star",
        summary: "the density test implies the star test",
        run: |a, c| Ok(vec![verify_density_implies_star(a.n, c)?]),
    },
    Claim {
        id: "h2-consistency",
        summary: "spectral H2 matches the degree formula and S >= H2",
        run: |a, c| Ok(vec![verify_h2_consistency(a.n, c)?]),
    },
    Claim {
        id: "edge-add-tr2",
        summary: "adding an edge keeps tr2 below tr2(star)",
        run: |a, c| Ok(vec![verify_edge_addition_tr2(a.n, c)?]),
    },
];

pub fn find(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

pub fn listing() -> String {
    CLAIMS.iter().map(|c| format!("  {:<22} {}", c.id, c.summary)).collect::<Vec<_>>().join("\n")
}
