//! Batch front end: structure files, reports and exit codes.

pub mod io;

use bialg::Field;

/// Exit codes shared by every command.
pub mod exit {
    pub const PASS: u8 = 0;
    pub const FAIL: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const POSTCONDITION: u8 = 3;
}

/// Accepts `Q`, `F<p>`, `Fp<p>` or a bare prime.
pub fn parse_field(s: &str) -> Result<Field, String> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::Q);
    }
    let digits = t
        .strip_prefix("Fp")
        .or_else(|| t.strip_prefix("F"))
        .or_else(|| t.strip_prefix("f"))
        .unwrap_or(t);
    let p: u32 = digits
        .parse()
        .map_err(|_| format!("unrecognized field {s:?}"))?;
    Field::fp(p).map_err(|e| e.to_string())
}

/// Maps an error chain to its exit code.
pub fn exit_code_for(e: &anyhow::Error) -> u8 {
    let post = e.chain().any(|c| {
        matches!(
            c.downcast_ref::<bialg::Error>(),
            Some(bialg::Error::Postcondition(_))
        )
    });
    if post {
        exit::POSTCONDITION
    } else {
        exit::INPUT
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spellings() {
        assert_eq!(parse_field("Q").unwrap(), Field::Q);
        assert_eq!(parse_field("F3").unwrap(), Field::fp(3).unwrap());
        assert_eq!(parse_field("7").unwrap(), Field::fp(7).unwrap());
        assert!(parse_field("F4").is_err());
        assert!(parse_field("R").is_err());
    }
}
