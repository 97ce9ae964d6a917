//! Built-in example documents, addressable as `fixture:NAME`.

pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
}

macro_rules! fixture {
    ($name:literal, $summary:literal) => {
        Fixture {
            name: $name,
            summary: $summary,
            text: include_str!(concat!("../../fixtures/", $name, ".json")),
        }
    };
}

pub const ALL: &[Fixture] = &[
    fixture!("gl2", "gl(2) with the matrix commutator and tau = trace"),
    fixture!("ex1_gl2", "gl(2) with bracket alpha∘[x, y] for conjugation alpha, beta = lambda*alpha, tau = trace"),
    fixture!("ex2_4dim", "4-dimensional algebra with brackets in span{x3, x4}, alpha and beta of rank one"),
    fixture!("ex3_3dim", "3-dimensional algebra, alpha = diag(p, q, q) with p nonzero"),
    fixture!("ex3_3dim_p0", "3-dimensional algebra, alpha = diag(0, q, q), general beta killing x1"),
    fixture!("ex4_3dim", "second 3-dimensional family, alpha = diag(0, q, q)"),
    fixture!("n4", "4-dimensional Nambu algebra with the cross-product bracket"),
    fixture!("sl2", "sl(2) in the basis e, f, h"),
];

pub fn get(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    ALL.iter().find(|f| f.name == name).map(|f| f.text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::Model;

    #[test]
    fn fixtures_parse_and_are_canonical() {
        for f in ALL {
            let m = Model::parse_json(f.text).unwrap_or_else(|e| panic!("{}: {e}", f.name));
            assert_eq!(m.to_json(), f.text, "{} is not in canonical form", f.name);
        }
    }
}
