/** Display formatting: the published tables use four decimals. */

export function fmt4(value: number): string {
  return value.toFixed(4);
}

export function fmtDelta(value: number): string {
  const text = value.toFixed(4);
  return value > 0 ? `+${text}` : text;
}

/** Label for a scale level: its linguistic term when named, else the value. */
export function levelLabel(term: string | null, value: number): string {
  if (term) return term;
  const rounded = Math.round(value * 10000) / 10000;
  return String(rounded);
}

export function weightsCsv(names: string[], weights: number[], intervals: [number, number][]): string {
  const lines = ["criterion,weight,lower,upper"];
  names.forEach((name, k) => {
    const [lo, hi] = intervals[k] ?? [NaN, NaN];
    lines.push(`${name},${weights[k]},${lo},${hi}`);
  });
  return lines.join("\n") + "\n";
}
