export function rest(...args: any[]): void {
  console.log(args.length, "any");
}
