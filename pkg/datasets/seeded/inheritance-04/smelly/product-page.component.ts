import { Component, Injectable } from '@angular/core';

export class BaseProductPageComponent {
  pageTitle = '';
  initPage() {
    console.log(`Initializing page: ${this.pageTitle}`);
  }
}

@Component({
  selector: 'app-product-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class ProductPageComponent extends BaseProductPageComponent {
  pageTitle = 'Product Page';
}
