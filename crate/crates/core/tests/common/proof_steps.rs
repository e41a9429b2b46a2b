// One entry per displayed projection in the proofs, transcribed as printed.
// `lam` and `mu` are patterns in a, b, c; `params` satisfy the case guard.

pub struct ProofStep {
    pub id: &'static str,
    pub algebra: &'static str,
    pub lam: &'static str,
    pub mu: &'static str,
    pub rep: &'static str,
    pub params: (i64, i64, i64),
    pub display: &'static str,
}

pub const PROOF_STEPS: &[ProofStep] = &[
    ProofStep {
        id: "abc.1.1",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "a,b,c|c+1",
        rep: "V",
        params: (5, 3, 0),
        display: "M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    },
    ProofStep {
        id: "abc.1.2.1",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "a,c+1,c|c+2",
        rep: "L2V",
        params: (4, 1, 0),
        display: "M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1} + M_{a,c+2,c+1|c+2}",
    },
    ProofStep {
        id: "abc.1.2.2",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "c+2,c+1,c|c+3",
        rep: "L3V",
        params: (2, 1, 0),
        display: "M_{c+2,c+1,c|c} + M_{c+2,c+2,c+1|c+2} + M_{c+2,c+1,c+1|c+1} + M_{c+3,c+2,c+1|c+3}",
    },
    ProofStep {
        id: "abc.1.2.3",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "c+1,c+1,c|c+2",
        rep: "L2V",
        params: (1, 1, 0),
        display: "M_{c+1,c+1,c|c} + M_{c+1,c+1,c+1|c+1} + M_{c+1,c+2,c+1|c+2} + M_{c+2,c+1,c+1|c+2}",
    },
    ProofStep {
        id: "abc.2.1",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "a,c,c|c+1",
        rep: "V",
        params: (3, 0, 0),
        display: "M_{a,c,c|c} + M_{a,c,c+1|c+1} + M_{a,c+1,c|c+1}",
    },
    ProofStep {
        id: "abc.2.2",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "c+1,c,c|c+2",
        rep: "L2V",
        params: (1, 0, 0),
        display: "M_{c+1,c,c|c} + M_{c+2,c+1,c|c+2} + M_{c+1,c,c+1|c+1} + M_{c+1,c+1,c|c+1} + M_{c+2,c,c+1|c+2}",
    },
    ProofStep {
        id: "abc.2.3",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "c,c,c|c+1",
        rep: "V",
        params: (0, 0, 0),
        display: "M_{c,c,c|c} + M_{c,c,c+1|c+1} + M_{c,c+1,c|c+1} + M_{c+1,c,c|c+1}",
    },
    ProofStep {
        id: "abc.3.1.1",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "a,b,c|c+1",
        rep: "V",
        params: (3, -2, 0),
        display: "M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}",
    },
    ProofStep {
        id: "abc.3.1.2",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "c+1,b,c|c+2",
        rep: "L2V",
        params: (1, -2, 0),
        display: "M_{c+1,b,c|c} + M_{c+1,b,c+1|c+1} + M_{c+2,b,c+1|c+2} + M_{c+1,c,b|c} + M_{c+1,c+1,b|c+1} + M_{c+2,c+1,b|c+2}",
    },
    ProofStep {
        id: "abc.3.2",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "c,b,c|c+1",
        rep: "V",
        params: (0, -2, 0),
        display: "M_{c,b,c|c} + M_{c,b,c+1|c+1} + M_{c+1,b,c|c+1} + M_{c,c,b|c} + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}",
    },
    ProofStep {
        id: "abc.3.3.1",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "a,b,c|c+1",
        rep: "V",
        params: (-1, -3, 0),
        display: "M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{c,a,b|c} + M_{a,c+1,b|c+1} + M_{c+1,a,b|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1}",
    },
    ProofStep {
        id: "abc.3.3.2",
        algebra: "3x1",
        lam: "a,b,c|c",
        mu: "b,b,c|c+1",
        rep: "V",
        params: (-2, -2, 0),
        display: "M_{b,b,c|c} + M_{b,b,c+1|c+1} + M_{b,c,b|c} + M_{b,c+1,b|c+1} + M_{c,b,b|c} + M_{c+1,b,b|c+1}",
    },
    ProofStep {
        id: "bac.1.1.1",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "b,a,c|c+1",
        rep: "V",
        params: (5, 3, 0),
        display: "M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    },
    ProofStep {
        id: "bac.1.2.1",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "c+1,a,c|c+2",
        rep: "L2V",
        params: (4, 1, 0),
        display: "M_{c+1,a,c|c} + M_{c+2,a,c+1|c+2} + M_{c+1,a,c+1|c+1} + M_{a,c+1,c|c} + M_{a,c+2,c+1|c+2}+ M_{a,c+1,c+1|c+1}",
    },
    ProofStep {
        id: "bac.1.2.2.first",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "c+1,c+2,c|c+3",
        rep: "L3V",
        params: (2, 1, 0),
        display: "M_{c+1,c+2,c|c} + 2M_{c+2,c+2,c+1|c+2} + M_{c+1,c+2,c+1|c+1} + M_{c+2,c+3,c+1|c+3} + M_{c+2,c+1,c|c} + M_{c+2,c+1,c+1|c+1} + M_{c+3,c+2,c+1|c+3}",
    },
    ProofStep {
        id: "bac.1.2.2.second",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "c+1,c+1,c|c+1",
        rep: "L2V",
        params: (2, 1, 0),
        display: "2M_{c+1,c+2,c|c} + 2M_{c+2,c+1,c|c} + 2M_{c+1,c+2,c+1|c+1} + 2M_{c+2,c+1,c+1|c+1} + 2M_{c+2,c+2,c+1|c+2}",
    },
    ProofStep {
        id: "bac.2.1.1",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "c,a,c|c+1",
        rep: "V",
        params: (3, 0, 0),
        display: "M_{c,a,c|c} + M_{c,a,c+1|c+1} + M_{c+1,a,c|c+1} + M_{a,c,c|c} + M_{a,c,c+1|c+1} + M_{a,c+1,c|c+1}",
    },
    ProofStep {
        id: "bac.2.1.2",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "c,c+1,c|c+2",
        rep: "L3V*",
        params: (1, 0, 0),
        display: "M_{c,c+1,c|c} + M_{c,c+2,c+1|c+2} + M_{c+1,c+2,c|c+2} + M_{c,c+1,c+1|c+1} + 2M_{c+1,c+1,c|c+1} + M_{c+2,c,c+1|c+2} + M_{c+2,c+1,c|c+2} + M_{c+1,c,c+1|c+1} + M_{c+1,c,c|c}",
    },
    ProofStep {
        id: "bac.3.1.1",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "b,a,c|c+1",
        rep: "V",
        params: (3, -2, 0),
        display: "M_{b,a,c|c} + M_{a,b,c|c} + M_{a,c,b|c} + M_{c,a,b|c} + M_{b,a,c+1|c+1} + M_{a,b,c+1|c+1} + M_{a,c+1,b|c+1} + M_{c+1,a,b|c+1}",
    },
    ProofStep {
        id: "bac.3.1.2",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "b,c+1,c|c+2",
        rep: "L2V",
        params: (1, -2, 0),
        display: "M_{b,c+1,c|c} + M_{b,c+2,c+1|c+2} + M_{b,c+1,c+1|c+1} + M_{c+1,b,c|c} + M_{c+2,b,c+1|c+2} + M_{c+1,b,c+1|c+1} + M_{c,c+1,b|c} + M_{c+1,c+2,b|c+2} + M_{c+1,c+1,b|c+1} + M_{c+1,c,b|c} + M_{c+2,c+1,b|c+2} + M_{c+1,c+1,b|c+1}",
    },
    ProofStep {
        id: "bac.3.2",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "b,c,c|c+1",
        rep: "V",
        params: (0, -2, 0),
        display: "M_{b,c,c|c} + M_{b,c,c+1|c+1} + M_{b,c+1,c|c+1} + M_{c,b,c|c} + M_{c,b,c+1|c+1} + M_{c+1,b,c|c+1} + M_{c,c,b|c} + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}",
    },
    ProofStep {
        id: "bac.3.3.1",
        algebra: "3x1",
        lam: "b,a,c|c",
        mu: "b,a,c|c+1",
        rep: "V",
        params: (-1, -3, 0),
        display: "M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    },
    ProofStep {
        id: "acb.1.1",
        algebra: "3x1",
        lam: "a,c,b|c",
        mu: "a,c,b|c+1",
        rep: "V",
        params: (5, 3, 0),
        display: "M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    },
    ProofStep {
        id: "acb.1.2.1",
        algebra: "3x1",
        lam: "a,c,b|c",
        mu: "a+1,c+1,c+1|c",
        rep: "L2V*",
        params: (3, 1, 0),
        display: "M_{a,c,c+1|c} + M_{a,c+1,c+1|c+1} + M_{a,c+1,c|c}",
    },
    ProofStep {
        id: "acb.1.2.2",
        algebra: "3x1",
        lam: "a,c,b|c",
        mu: "c+2,c+1,c+1|c",
        rep: "L2V*",
        params: (1, 1, 0),
        display: "M_{c+1,c,c+1|c} + M_{c+1,c+1,c+1|c+1} + M_{c+2,c+1,c+1|c+2} + M_{c+1,c+1,c|c}",
    },
    ProofStep {
        id: "acb.3.1.1",
        algebra: "3x1",
        lam: "a,c,b|c",
        mu: "a,c,b|c+1",
        rep: "V",
        params: (3, -2, 0),
        display: "M_{a,c,b|c} + M_{a,c+1,b|c+1}",
    },
    ProofStep {
        id: "acb.3.1.2",
        algebra: "3x1",
        lam: "a,c,b|c",
        mu: "c+1,c,b|c+2",
        rep: "L2V",
        params: (1, -2, 0),
        display: "M_{c+1,c,b|c} + M_{c+1,c+1,b|c+1} + M_{c+2,c+1,b|c+2}",
    },
    ProofStep {
        id: "acb.3.2",
        algebra: "3x1",
        lam: "a,c,b|c",
        mu: "c,c,b|c+1",
        rep: "V",
        params: (0, -2, 0),
        display: "M_{c,c,b|c} + M_{c,c+1,b|c+1} + M_{c+1,c,b|c+1}",
    },
    ProofStep {
        id: "acb.3.3",
        algebra: "3x1",
        lam: "a,c,b|c",
        mu: "a,c,b|c+1",
        rep: "V",
        params: (-1, -3, 0),
        display: "M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    },
    ProofStep {
        id: "bca.1.1.1",
        algebra: "3x1",
        lam: "b,c,a|c",
        mu: "b,c,a|c+1",
        rep: "V",
        params: (5, 3, 0),
        display: "M_{b,c,a|c} + M_{b,a,c|c} + M_{a,b,c|c} + M_{a,c,b|c} + M_{b,c+1,a|c+1} + M_{b,a,c+1|c+1} + M_{a,b,c+1|c+1} + M_{a,c+1,b|c+1}",
    },
    ProofStep {
        id: "bca.1.2.1",
        algebra: "3x1",
        lam: "b,c,a|c",
        mu: "c+1,c,a|c+2",
        rep: "L2V",
        params: (4, 1, 0),
        display: "M_{c+1,c,a|c} + M_{c+2,c+1,a|c+2} + M_{c+1,c+1,a|c+1} + M_{a,c,c+1|c} + M_{a,c+1,c+2|c+2} + M_{a,c+1,c+1|c+1} + M_{c+1,a,c|c} + M_{c+1,a,c+2|c+2} + M_{c+1,a,c+1|c+1} + M_{a,c+1,c|c} + M_{a,c+2,c+1|c+2} + M_{a,c+1,c+1|c+1}",
    },
    ProofStep {
        id: "bca.1.2.2",
        algebra: "3x1",
        lam: "b,c,a|c",
        mu: "c+2,c+1,c+2|c",
        rep: "L2V*",
        params: (2, 1, 0),
        display: "M_{c+1,c,c+2|c} + M_{c+2,c,c+1|c} + M_{c+1,c+1,c+2|c+1} + M_{c+2,c+1,c+1|c+1} + M_{c+2,c+1,c+2|c+2} + M_{c+2,c+1,c|c} + M_{c+1,c+2,c|c} + M_{c+1,c+2,c+1|c+1} + M_{c+2,c+1,c+1|c+1} + M_{c+2,c+2,c+1|c+2}",
    },
    ProofStep {
        id: "bca.2.1",
        algebra: "3x1",
        lam: "b,c,a|c",
        mu: "c,c,a|c+1",
        rep: "V",
        params: (3, 0, 0),
        display: "M_{c,c,a|c} + M_{c+1,c,a|c+1} + M_{c,c+1,a|c+1} + M_{c,a,c|c} + M_{c+1,a,c|c+1} + M_{c,a,c+1|c+1} + M_{a,c,c|c} + M_{a,c+1,c|c+1} + M_{a,c,c+1|c+1}",
    },
    ProofStep {
        id: "bca.2.2",
        algebra: "3x1",
        lam: "b,c,a|c",
        mu: "c+1,c+1,c+1|c",
        rep: "L2V*",
        params: (1, 0, 0),
        display: "M_{c,c,c+1|c} + M_{c+1,c,c|c} + M_{c,c+1,c|c} + M_{c,c+1,c+1|c+1} + M_{c+1,c,c+1|c+1} + M_{c+1,c+1,c|c+1}",
    },
    ProofStep {
        id: "bca.3.1",
        algebra: "3x1",
        lam: "b,c,a|c",
        mu: "b,c,a|c+1",
        rep: "V",
        params: (3, -2, 0),
        display: "M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    },
    ProofStep {
        id: "bca.3.2.1",
        algebra: "3x1",
        lam: "b,c,a|c",
        mu: "c-1,c+1,c+1|c",
        rep: "V*",
        params: (1, -1, 0),
        display: "M_{c-1,c,c+1|c} + M_{c-1,c+1,c|c} + M_{c-1,c+1,c+1|c+1} + M_{c,c-1,c+1|c} + M_{c+1,c-1,c|c} + M_{c+1,c-1,c+1|c+1} + M_{c,c+1,c-1|c} + M_{c+1,c,c-1|c} + M_{c+1,c+1,c-1|c+1}",
    },
    ProofStep {
        id: "bca.3.2.2",
        algebra: "3x1",
        lam: "b,c,a|c",
        mu: "b-1,c,c+1|c",
        rep: "V",
        params: (1, -3, 0),
        display: "M_{b,c,c+1|c} + M_{b,c+1,c|c} + M_{c,b,c+1|c} + M_{c,c+1,b|c} + M_{c+1,b,c|c} + M_{c+1,b,c|c}",
    },
    ProofStep {
        id: "bca.3.4.1",
        algebra: "3x1",
        lam: "b,c,a|c",
        mu: "b,c,a|c+1",
        rep: "V",
        params: (-1, -3, 0),
        display: "M_{b,c,a|c} + M_{b,c+1,a|c+1} + M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    },
    ProofStep {
        id: "cab.1.1.1",
        algebra: "3x1",
        lam: "c,a,b|c",
        mu: "c+1,a,b|c",
        rep: "V*",
        params: (5, 3, 0),
        display: "M_{c,a,b|c} + M_{c+1,a,b|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1} M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    },
    ProofStep {
        id: "cab.1.1.2",
        algebra: "3x1",
        lam: "c,a,b|c",
        mu: "c+1,b,b|c",
        rep: "V*",
        params: (3, 3, 0),
        display: "M_{c,b,b|c} + M_{c+1,b,b|c+1} + M_{b,c,b|c} + M_{b,c+1,b|c+1} + M_{b,b,c|c} + M_{b,b,c+1|c+1}",
    },
    ProofStep {
        id: "cab.1.2.1",
        algebra: "3x1",
        lam: "c,a,b|c",
        mu: "c+1,a,c+1|c",
        rep: "V*",
        params: (3, 1, 0),
        display: "M_{c,a,c+1|c} + M_{c+1,a,c|c} + M_{c+1,a,c+1|c+1} + M_{a,c,c+1|c} + M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1}",
    },
    ProofStep {
        id: "cab.1.2.2",
        algebra: "3x1",
        lam: "c,a,b|c",
        mu: "c+1,c+1,c+1|c",
        rep: "V*",
        params: (1, 1, 0),
        display: "M_{c,c+1,c+1|c} + M_{c+1,c,c+1|c} + M_{c+1,c+1,c|c} + M_{c+1,c+1,c+1|c+1}",
    },
    ProofStep {
        id: "cab.3.1.1",
        algebra: "3x1",
        lam: "c,a,b|c",
        mu: "c+1,a,b|c",
        rep: "V*",
        params: (3, -2, 0),
        display: "M_{c,a,b|c} + M_{c+1,a,b|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}",
    },
    ProofStep {
        id: "cab.3.1.2",
        algebra: "3x1",
        lam: "c,a,b|c",
        mu: "c+1,c+1,b|c",
        rep: "V*",
        params: (1, -2, 0),
        display: "M_{c,c+1,b|c} + M_{c+1,c+1,b|c+1}",
    },
    ProofStep {
        id: "cab.3.3",
        algebra: "3x1",
        lam: "c,a,b|c",
        mu: "c,a,b|c+1",
        rep: "V",
        params: (-1, -3, 0),
        display: "M_{c,a,b|c} + M_{c+1,a,b|c+1}",
    },
    ProofStep {
        id: "cba.1.1.1",
        algebra: "3x1",
        lam: "c,b,a|c",
        mu: "c,b,a|c+1",
        rep: "V",
        params: (5, 3, 0),
        display: "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{b,c,a|c} M_{b,c+1,a|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1} M_{b,a,c|c} + M_{b,a,c+1|c+1} + M_{a,c,b|c} M_{a,c+1,b|c+1} + M_{a,b,c|c} + M_{a,b,c+1|c+1}",
    },
    ProofStep {
        id: "cba.1.2.1",
        algebra: "3x1",
        lam: "c,b,a|c",
        mu: "c+1,c+1,a|c",
        rep: "V*",
        params: (3, 1, 0),
        display: "M_{c,c+1,a|c} + M_{c+1,c,a|c} + M_{c+1,c+1,a|c+1} M_{c,a,c+1|c} + M_{c+1,a,c|c} + M_{c+1,a,c+1|c+1} M_{a,c,c+1|c} + M_{a,c+1,c|c} + M_{a,c+1,c+1|c+1}",
    },
    ProofStep {
        id: "cba.3.1.1",
        algebra: "3x1",
        lam: "c,b,a|c",
        mu: "c,b,a|c+1",
        rep: "V",
        params: (3, -2, 0),
        display: "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{c,a,b|c} + M_{c+1,a,b|c+1} M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,c,b|c} + M_{a,c+1,b|c+1}",
    },
    ProofStep {
        id: "cba.3.1.2",
        algebra: "3x1",
        lam: "c,b,a|c",
        mu: "c+1,b,c+1|c",
        rep: "V*",
        params: (1, -2, 0),
        display: "M_{c,b,c+1|c} + M_{c,b,c|c} + M_{c+1,b,c+1|c+1} M_{c,c+1,b|c} + M_{c,b,c|c} + M_{c+1,c+1,b|c+1}",
    },
    ProofStep {
        id: "cba.3.3.1",
        algebra: "3x1",
        lam: "c,b,a|c",
        mu: "c,b,a|c+1",
        rep: "V",
        params: (-1, -3, 0),
        display: "M_{c,b,a|c} + M_{c+1,b,a|c+1} + M_{c,a,b|c} + M_{c+1,a,b,c+1}",
    },
    ProofStep {
        id: "ab|ba.1",
        algebra: "2x2",
        lam: "a,b|b,a",
        mu: "a,b|b+1,a+1",
        rep: "L2V",
        params: (3, 0, 0),
        display: "M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}",
    },
    ProofStep {
        id: "ab|ba.2.inner",
        algebra: "2x2",
        lam: "a,a-1|a-1,a+2",
        mu: "a,a-1|a+1,a+2",
        rep: "L2V",
        params: (1, 0, 0),
        display: "M_{a,a-1|a-1,a+2} + M_{a,a|a,a+2} + M_{a+1,a|a+1,a+2}",
    },
    ProofStep {
        id: "ab|ba.2",
        algebra: "2x2",
        lam: "a,b|b,a",
        mu: "a,a-1|a-1,a+2",
        rep: "L2V",
        params: (1, 0, 0),
        display: "M_{a,a-1|a-1,a} + M_{a+1,a-1|a-1,a+1} + M_{a,a|a,a} + M_{a,a+1|a,a+1} + 2M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a} + M_{a+1,a+1|a+1,a+1} + M_{a+2,a|a,a+2} + M_{a+2,a+1|a+1,a+2}",
    },
    ProofStep {
        id: "ab|ba.3",
        algebra: "2x2",
        lam: "a,b|b,a",
        mu: "a,a|a+1,a+1",
        rep: "L2V",
        params: (1, 1, 0),
        display: "M_{a,a|a,a} + M_{a+1,a|a,a+1} + M_{a,a+1|a+1,a} + M_{a+1,a+1|a+1,a+1} + M_{a+1,a|a+1,a} + M_{a,a+1|a,a+1}",
    },
    ProofStep {
        id: "ab|ab.1",
        algebra: "2x2",
        lam: "a,b|a,b",
        mu: "a,b|a+1,b+1",
        rep: "L2V",
        params: (3, 0, 0),
        display: "M_{a,b|a,b} + M_{a+1,b|a+1,b} + M_{a,b+1|a,b+1} + M_{a+1,b+1|a+1,b+1} + M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}",
    },
    ProofStep {
        id: "ab|ab.2",
        algebra: "2x2",
        lam: "a,b|a,b",
        mu: "a,a-1|a+1,a+1",
        rep: "L3V",
        params: (1, 0, 0),
        display: "M_{a,a-1|a,a-1} + M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a} + M_{a+1,a-1|a-1,a+1} + M_{a+1,a-1|a+1,a-1} + M_{a,a|a,a} + M_{a,a-1|a-1,a}",
    },
    ProofStep {
        id: "ba|ba.1",
        algebra: "2x2",
        lam: "b,a|b,a",
        mu: "b,a|b+1,a+1",
        rep: "L2V",
        params: (3, 0, 0),
        display: "M_{b,a|b,a} + M_{b,a+1|b,a+1} + M_{b+1,a|b+1,a} + M_{b+1,a+1|b+1,a+1} + M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}",
    },
    ProofStep {
        id: "ba|ba.2.inner",
        algebra: "2x2",
        lam: "a,a|a-1,a",
        mu: "a+1,a+1|a-1,a",
        rep: "L2V*",
        params: (1, 0, 0),
        display: "M_{a,a |a-1, a} + M_{a+1, a | a-1, a+1} + M_{a, a+1 |a-1, a+1}",
    },
    ProofStep {
        id: "ba|ba.2",
        algebra: "2x2",
        lam: "b,a|b,a",
        mu: "a,a|a-1,a",
        rep: "V*",
        params: (1, 0, 0),
        display: "M_{a-1,a|a-1,a} + M_{a,a-1|a-1,a} + M_{a,a|a,a} + M_{a-1,a+1|a-1,a+1} + M_{a,a+1|a,a+1} + M_{a+1,a-1|a-1,a+1} + M_{a+1,a|a,a+1}",
    },
    ProofStep {
        id: "ba|ab.1",
        algebra: "2x2",
        lam: "b,a|a,b",
        mu: "b,a|a+1,b+1",
        rep: "L2V",
        params: (3, 0, 0),
        display: "M_{b,a|a,b} + M_{b,a+1|a+1,b} + M_{b+1,a|a,b+1} + M_{b+1,a+1|a+1,b+1} + M_{b,a|b,a} + M_{b,a+1|b,a+1} + M_{b+1,a|b+1,a} + M_{b+1,a+1|b+1,a+1} + M_{a,b|a,b} + M_{a+1,b|a+1,b} + M_{a,b+1|a,b+1} + M_{a+1,b+1|a+1,b+1} + M_{a,b|b,a} + M_{a+1,b|b,a+1} + M_{a,b+1|b+1,a} + M_{a+1,b+1|b+1,a+1}",
    },
    ProofStep {
        id: "ba|ab.2",
        algebra: "2x2",
        lam: "b,a|a,b",
        mu: "a-1,a|a+1,a+1",
        rep: "L3V",
        params: (1, 0, 0),
        display: "M_{a-1,a|a,a-1} + M_{a,a+1|a,a+1} + M_{a,a+1|a+1,a} + M_{a-1,a+1|a+1,a-1} + M_{a-1,a+1|a-1,a+1} + M_{a-1,a|a-1,a} + M_{a,a-1|a,a-1} + M_{a+1,a|a,a+1} + M_{a+1,a|a+1,a} + M_{a+1,a-1|a-1,a+1} + M_{a+1,a-1|a+1,a-1} + 2M_{a,a|a,a} + M_{a,a-1|a-1,a}",
    },
];
