//! Fixed-precision float formatting for machine-readable output.

/// Formats `x` with exactly 17 significant digits.
///
/// Positional notation is used for decimal exponents in `-5..17`, scientific
/// notation otherwise. Non-finite values print as `inf`, `-inf`, `nan`.
pub fn fmt17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..17).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let mut out = String::with_capacity(digits.len() + 8);
    out.push_str(sign);
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        let int_len = exp as usize + 1;
        out.push_str(&digits[..int_len]);
        if int_len < digits.len() {
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    }
    out
}

/// JSON number carrying the [`fmt17`] text verbatim; non-finite values
/// become the strings `"inf"`, `"-inf"`, `"nan"`.
pub fn json_num(x: f64) -> serde_json::Value {
    let text = fmt17(x);
    if !x.is_finite() {
        return serde_json::Value::String(text);
    }
    let n: serde_json::Number = text.parse().expect("fmt17 emits valid JSON numbers");
    serde_json::Value::Number(n)
}
