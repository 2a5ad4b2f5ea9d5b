export function cast(v: unknown) {
  return (v as any).name;
}
