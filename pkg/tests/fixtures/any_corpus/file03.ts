export function f(x: any, y?: any): any {
  return x ?? y;
}
