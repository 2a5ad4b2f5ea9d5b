import { AfterViewInit, Component, ElementRef, ViewChild } from '@angular/core';

@Component({
  selector: 'app-alert',
  template: `<div #alertBox>Alert message</div>`
})
export class AlertComponent implements AfterViewInit {
  @ViewChild('alertBox') alertBox!: ElementRef;

  ngAfterViewInit() {
    this.alertBox.nativeElement.style.backgroundColor = 'red';
  }
}
