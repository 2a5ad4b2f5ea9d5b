export interface Bag {
  [key: string]: any;
  items: Array<any>;
}
