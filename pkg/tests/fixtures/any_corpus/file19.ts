export abstract class D {
  abstract handle(evt: any): Promise<any>;
  protected meta?: any;
}
