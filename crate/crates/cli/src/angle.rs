// Copyright 2026 The grover-phase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Angle arguments in radians, with `pi` literals.
//!
//! Accepted forms: `1.5`, `-2`, `pi`, `-pi`, `1.7pi`, `1.7*pi`, `pi/2`,
//! `3pi/4`, `-0.5*pi/3`.

use std::f64::consts::PI;

pub fn parse_angle(text: &str) -> Result<f64, String> {
    let s = text.trim().to_ascii_lowercase();
    let value = match s.find("pi") {
        None => s.parse::<f64>().map_err(|_| format!("invalid angle `{text}`"))?,
        Some(pos) => {
            let coef = s[..pos].trim_end_matches('*').trim();
            let coef = match coef {
                "" | "+" => 1.0,
                "-" => -1.0,
                c => c
                    .parse::<f64>()
                    .map_err(|_| format!("invalid coefficient in angle `{text}`"))?,
            };
            let rest = s[pos + 2..].trim();
            let denom = if rest.is_empty() {
                1.0
            } else {
                rest.strip_prefix('/')
                    .and_then(|d| d.trim().parse::<f64>().ok())
                    .filter(|d| *d != 0.0)
                    .ok_or_else(|| format!("invalid divisor in angle `{text}`"))?
            };
            coef * PI / denom
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("angle `{text}` is not finite"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_angle("0").unwrap(), 0.0);
        assert_eq!(parse_angle("2.25").unwrap(), 2.25);
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("-pi").unwrap(), -PI);
        assert_eq!(parse_angle("PI").unwrap(), PI);
        assert_eq!(parse_angle("1.7pi").unwrap(), 1.7 * PI);
        assert_eq!(parse_angle("1.7*pi").unwrap(), 1.7 * PI);
        assert_eq!(parse_angle("pi/2").unwrap(), PI / 2.0);
        assert_eq!(parse_angle("3pi/4").unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_angle(" -0.5*pi/3 ").unwrap(), -0.5 * PI / 3.0);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "2xpi", "pi/0", "pi/", "pi*2", "nan", "inf", "1e999"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }
}
