import { Component, Injectable } from '@angular/core';
import { PageTitleService } from './page-title.service';

@Component({
  selector: 'app-invoice-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class InvoicePageComponent {
  pageTitle = 'Invoice Page';
  constructor(private titles: PageTitleService) {}
  ngOnInit() {
    this.titles.initPage(this.pageTitle);
  }
}
