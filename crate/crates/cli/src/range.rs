/// Parse an inclusive range: `a..b`, `a..=b`, a single value, or a comma list.
pub fn parse_range(text: &str) -> Result<Vec<usize>, String> {
    let text = text.trim();
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad range {text:?}: {e}"))
    };
    let values: Vec<usize> = if let Some((a, b)) = text.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (num(a)?, num(b)?);
        (a..=b).collect()
    } else {
        text.split(',').map(num).collect::<Result<_, _>>()?
    };
    if values.is_empty() {
        return Err(format!("range {text:?} is empty"));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_range("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_range("2..=4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_range("7").unwrap(), vec![7]);
        assert_eq!(parse_range("1, 3,5").unwrap(), vec![1, 3, 5]);
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("x").is_err());
        assert!(parse_range("1..").is_err());
    }
}
