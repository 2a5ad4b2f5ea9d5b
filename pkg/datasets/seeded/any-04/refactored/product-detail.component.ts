import { Component } from '@angular/core';
import { Product, Api } from './product.model';

@Component({
  selector: 'app-product-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class ProductDetailComponent {
  current: Product | null = null;
  constructor(private api: Api) {}

  cache = new Map<string, Product>();

}
